#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charclass/basics.hpp"

namespace charclass {

// Exponent vector of a monomial; one entry per variable.
using Exponents = std::vector<int>;

long total_degree(const Exponents& e);

// Graded reverse lexicographic order. a < b iff deg a < deg b, or the
// degrees tie and the rightmost nonzero entry of a - b is positive.
bool grevlex_less(const Exponents& a, const Exponents& b);

bool monomial_divides(const Exponents& divisor, const Exponents& m);

// Exact multivariate polynomial over Rat. Terms are kept sorted in
// descending grevlex order with no zero coefficients, so structural
// equality coincides with mathematical equality (canonical form).
class Polynomial {
  public:
    using Term = std::pair<Exponents, Rat>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rat& c);
    static Polynomial variable(int nvars, int index);
    // Single term c * x^e. Ignores zero c.
    static Polynomial monomial(Exponents e, const Rat& c);
    // Builds canonical form from an arbitrary term list (merges duplicates).
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const Polynomial& o) const = default;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial pow(unsigned k) const;

    // Formal partial derivative with respect to variable `index`.
    Polynomial partial(int index) const;

    // Total degree if every term has the same one; nullopt otherwise
    // (in particular for the zero polynomial, whose degree is undefined).
    std::optional<long> homogeneous_degree() const;

    // Max total degree over terms; -1 for the zero polynomial.
    long degree() const;

    Rat coefficient(const Exponents& e) const;

    // Canonical text form. parse_polynomial(str(), nvars()) round-trips.
    std::string str() const;

  private:
    int nvars_ = 0;
    std::vector<Term> terms_;  // descending grevlex, nonzero coefficients

    void require_same_ring(const Polynomial& o) const;
};

// Sum_k lambda_k * polys[k] with each lambda_k drawn in listed order from
// SplitMix64(seed).next_coefficient(). Reproducibility is part of the
// contract: the same seed always yields the same combination.
Polynomial random_linear_combination(const std::vector<Polynomial>& polys, std::uint64_t seed);

// Text grammar: variables x0..x9 (any index below nvars) or the aliases
// x,y,z,w when nvars <= 4; integer or integer/positive-integer
// coefficients; operators + - * ^ and parentheses; '*' is mandatory
// between factors; '^' takes a nonnegative integer literal; whitespace
// is insignificant. Throws InputError on malformed input.
Polynomial parse_polynomial(std::string_view text, int nvars);

// Ring-extension helpers: insert a fresh variable (exponent zero
// everywhere) at `position`, or remove a variable that no term uses.
Polynomial insert_variable(const Polynomial& p, int position);
Polynomial remove_variable(const Polynomial& p, int position);

}  // namespace charclass
