#pragma once

#include <utility>
#include <vector>

#include "charclass/polynomial.hpp"

namespace charclass {

// Monomial orders used by the engine: graded reverse lexicographic
// (default), or a block order whose leading block of `elim_vars`
// variables is eliminated (block grevlex on each side).
struct MonomialOrder {
    enum class Kind { Grevlex, Elimination };
    Kind kind = Kind::Grevlex;
    int elim_vars = 0;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder eliminate(int leading_vars) {
        return {Kind::Elimination, leading_vars};
    }

    bool less(const Exponents& a, const Exponents& b) const;
    bool operator==(const MonomialOrder&) const = default;
};

// Reduced Groebner basis: monic generators, no term of any generator
// divisible by the leading term of another, sorted by ascending leading
// term. Unique for a given ideal and order, hence deterministic output.
struct GroebnerBasis {
    std::vector<Polynomial> gens;
    MonomialOrder order;
    int nvars = 0;

    bool is_unit_ideal() const;
};

// Execution mode for the reduction kernels. Parallel batches independent
// S-polynomial reductions across OpenMP threads; Serial is the reference
// path. Both produce the identical reduced basis.
enum class ExecMode { Serial, Parallel };

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         MonomialOrder order = MonomialOrder::grevlex(),
                         ExecMode exec = ExecMode::Parallel);

// Unique remainder of p modulo gb; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Projective dimension (-1 if V(I) is empty) and degree of V(I) in P^n,
// n = nvars-1, read off the Hilbert series of the leading-term ideal.
// For dimension 0 the degree is the eventual constant Hilbert value.
// Requires homogeneous generators.
std::pair<int, long> hilbert_dimension_degree(const GroebnerBasis& gb);

// Generators of the saturation (I : h^infinity), computed by adjoining
// an auxiliary variable t with the relation t*h - 1 and eliminating t
// through a block order. Returns the reduced grevlex basis of the
// result, which is homogeneous whenever the inputs are.
std::vector<Polynomial> saturate_by_poly(const std::vector<Polynomial>& gens,
                                         const Polynomial& h,
                                         ExecMode exec = ExecMode::Parallel);

// Vector-space dimension of the quotient by a zero-dimensional affine
// ideal (count of standard monomials). For the affine Jacobian ideal of
// a quasi-homogeneous isolated singularity this is the Milnor number;
// in general it is the Tjurina-style colength, and callers needing mu
// for other singularities must not use it. Throws InputError when the
// ideal is not zero-dimensional.
long quotient_dimension(const std::vector<Polynomial>& gens,
                        ExecMode exec = ExecMode::Parallel);

// True iff p vanishes on V(gens), decided by testing whether
// 1 lies in (gens) + (t*p - 1).
bool radical_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                        ExecMode exec = ExecMode::Parallel);

}  // namespace charclass
