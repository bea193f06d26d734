#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charclass {

// Exact arbitrary-precision rational / integer. No floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

// Invalid or degenerate input. The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Genericity failure that survived the retry protocol. CLI exit code 3.
struct NonGenericSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// splitmix64. 64-bit state, additive constant 0x9E3779B97F4A7C15, two
// xor-multiply finalization rounds. This exact update is part of the
// external reproducibility contract (see README).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Nonzero integer in [-kCoeffBound, kCoeffBound].
    long next_coefficient() {
        std::uint64_t r = next() % (2 * static_cast<std::uint64_t>(kCoeffBound));
        long v = static_cast<long>(r) - kCoeffBound;  // [-kCoeffBound, kCoeffBound-1]
        return v >= 0 ? v + 1 : v;                    // skip zero
    }

    static constexpr long kCoeffBound = 99991;

  private:
    std::uint64_t state_;
};

// Deterministic substream derivation: hashes (seed, salt) into a fresh
// 64-bit seed. Used to give independent draws to independent subproblems.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 g(seed ^ (0xBF58476D1CE4E5B9ULL * (salt + 1)));
    return g.next();
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw InputError("schema-error: bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace charclass
