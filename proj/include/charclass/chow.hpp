#pragma once

#include <string>
#include <vector>

#include "charclass/basics.hpp"

namespace charclass {

// Homology class on P^n: coeffs[i] is the coefficient of [P^i]. All
// arithmetic truncates above degree n (H^{n+1} = 0).
struct ChowClass {
    int n = 0;
    std::vector<Rat> coeffs;  // size n+1, index = dimension

    ChowClass() = default;
    explicit ChowClass(int ambient) : n(ambient), coeffs(ambient + 1, Rat(0)) {}

    static ChowClass zero(int n) { return ChowClass(n); }
    static ChowClass fundamental(int n);  // [P^n]
    static ChowClass point(int n);        // [P^0]

    bool operator==(const ChowClass&) const = default;
    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass scaled(const Rat& c) const;
    bool is_zero() const;

    // degree-zero (point) component; for a CSM class this is chi
    const Rat& integral() const { return coeffs[0]; }

    // a_0 - a_1 + a_2 - ... : negate the odd-dimensional components
    ChowClass dual() const;

    // cap with a cohomology polynomial sum_k c[k] H^k:
    // (c cap a)_j = sum_k c[k] a_{j+k}
    ChowClass cap(const std::vector<Rat>& hpoly) const;

    std::string str() const;  // e.g. "3[P1] - 9[P0]"
};

// Truncated polynomials in H (index = power, length n+1).
std::vector<Rat> hpoly_one(int n);
std::vector<Rat> hpoly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b);
// (1 + c H)^e for any integer e; negative e expands the geometric series.
std::vector<Rat> hpoly_unit_power(const Rat& c, long e, int n);

// Truncated series in two commuting divisor symbols: Y the exceptional
// class, Z the hypersurface pullback class. Total degree capped at n.
struct BlowupSeries {
    int n = 0;
    std::vector<Rat> c;  // c[i * (n+1) + j] is the Y^i Z^j coefficient

    BlowupSeries() = default;
    explicit BlowupSeries(int ambient) : n(ambient), c((ambient + 1) * (ambient + 1), Rat(0)) {}

    static BlowupSeries one(int n);
    static BlowupSeries sym_y(int n);
    static BlowupSeries sym_z(int n);

    Rat& at(int i, int j) { return c[i * (n + 1) + j]; }
    const Rat& at(int i, int j) const { return c[i * (n + 1) + j]; }

    bool operator==(const BlowupSeries&) const = default;
    BlowupSeries operator+(const BlowupSeries& o) const;
    BlowupSeries operator-(const BlowupSeries& o) const;
    BlowupSeries operator*(const BlowupSeries& o) const;
    BlowupSeries scaled(const Rat& k) const;
    // requires constant term +1 or -1
    BlowupSeries inverse() const;
};

// Segre data of the singular subscheme: s[m] is the codimension-m
// coefficient, i.e. the class s_m H^m cap [P^n]. The pushforward
// dictionary is pi_*(Y^m) = (-1)^{m-1} s_m for m >= 1 and
// pi_*(Y^0) = [P^n].
struct SegreData {
    int n = 0;
    std::vector<Rat> s;  // index = codimension, s[0] unused (= 0)

    SegreData() = default;
    explicit SegreData(int ambient) : n(ambient), s(ambient + 1, Rat(0)) {}

    bool is_zero() const;
    ChowClass as_chow() const;
    bool operator==(const SegreData&) const = default;
};

// pi_* of a rational expression in Y and Z: substitute Z -> d H by the
// projection formula and push Y powers through the Segre dictionary.
ChowClass pushforward_series(const BlowupSeries& expr, const SegreData& segre, long d);

// CSM class of a linear P^k inside P^n: binomial coefficients of (1+H)^{k+1}.
ChowClass csm_of_linear_subspace(int k, int n);

inline Rat cap_and_integral(const ChowClass& c) { return c.integral(); }

}  // namespace charclass
