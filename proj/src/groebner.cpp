#include "charclass/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace charclass {

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const {
    if (kind == Kind::Grevlex) return grevlex_less(a, b);
    // block order: grevlex on the leading block, tie broken by grevlex
    // on the remaining variables
    long da = 0, db = 0;
    for (int i = 0; i < elim_vars; ++i) da += a[i], db += b[i];
    if (da != db) return da < db;
    for (int i = elim_vars; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    long ra = 0, rb = 0;
    for (std::size_t i = elim_vars; i < a.size(); ++i) ra += a[i], rb += b[i];
    if (ra != rb) return ra < rb;
    for (std::size_t i = a.size(); i-- > static_cast<std::size_t>(elim_vars);)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

bool GroebnerBasis::is_unit_ideal() const {
    return gens.size() == 1 && gens.front().degree() == 0;
}

namespace {

// Working representation: terms sorted descending in the active order.
struct OP {
    std::vector<Polynomial::Term> t;
    bool zero() const { return t.empty(); }
    const Exponents& lm() const { return t.front().first; }
    const Rat& lc() const { return t.front().second; }
};

OP to_op(const Polynomial& p, const MonomialOrder& ord) {
    OP r;
    r.t = p.terms();
    std::sort(r.t.begin(), r.t.end(),
              [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
    return r;
}

Polynomial from_op(const OP& p, int nvars) { return Polynomial::from_terms(nvars, p.t); }

// a - c * x^shift * b, both operands sorted in `ord`. Shifting by a fixed
// monomial preserves any monomial order, so a single merge suffices.
OP subtract_multiple(const OP& a, const Rat& c, const Exponents& shift, const OP& b,
                     const MonomialOrder& ord) {
    OP r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    Exponents eb;
    auto advance_b = [&]() {
        const Exponents& e = b.t[j].first;
        eb.resize(e.size());
        for (std::size_t v = 0; v < e.size(); ++v) eb[v] = e[v] + shift[v];
    };
    if (j < b.t.size()) advance_b();
    while (i < a.t.size() && j < b.t.size()) {
        if (a.t[i].first == eb) {
            Rat s = a.t[i].second - c * b.t[j].second;
            if (s != 0) r.t.emplace_back(a.t[i].first, std::move(s));
            ++i;
            if (++j < b.t.size()) advance_b();
        } else if (ord.less(eb, a.t[i].first)) {
            r.t.push_back(a.t[i]);
            ++i;
        } else {
            r.t.emplace_back(eb, -c * b.t[j].second);
            if (++j < b.t.size()) advance_b();
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) {
        advance_b();
        r.t.emplace_back(eb, -c * b.t[j].second);
    }
    return r;
}

// Clear denominators, divide by integer content, make the leading
// coefficient positive. Controls coefficient growth between reductions.
void normalize_content(OP& p) {
    if (p.zero()) return;
    Int den(1);
    for (const auto& [e, c] : p.t) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Int g(0);
    for (const auto& [e, c] : p.t) {
        Int num = c.get_num() * (den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    Rat scale(den, g);
    scale.canonicalize();
    if (p.lc() < 0) scale = -scale;
    for (auto& [e, c] : p.t) c *= scale;
}

void make_monic(OP& p) {
    if (p.zero()) return;
    Rat inv = 1 / p.lc();
    for (auto& [e, c] : p.t) c *= inv;
}

// Full normal form of p against basis (first divisor in index order wins;
// every term is reduced, not only the leading one).
OP reduce_full(OP p, const std::vector<OP>& basis, const MonomialOrder& ord) {
    OP rem;
    Exponents shift;
    while (!p.zero()) {
        const Exponents& lead = p.lm();
        const OP* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.zero() && monomial_divides(g.lm(), lead)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            rem.t.push_back(std::move(p.t.front()));
            p.t.erase(p.t.begin());
            continue;
        }
        shift.resize(lead.size());
        for (std::size_t v = 0; v < lead.size(); ++v) shift[v] = lead[v] - reducer->lm()[v];
        Rat c = p.lc() / reducer->lc();
        p = subtract_multiple(p, c, shift, *reducer, ord);
    }
    return rem;
}

Exponents lcm_exponents(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime_leads(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

struct Pair {
    Exponents lcm;
    int i, j;  // i < j
};

struct PairCmp {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.lcm != b.lcm) return ord->less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

std::uint64_t pair_key(int i, int j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

// Buchberger with normal selection (smallest lcm first), the coprime and
// chain criteria, and batched S-polynomial reduction. Batches are frozen
// against the current basis and reduced independently, which is where the
// parallel mode applies; results are folded back in deterministic order.
std::vector<OP> buchberger_core(std::vector<OP> basis, const MonomialOrder& ord, ExecMode exec) {
    std::set<Pair, PairCmp> queue{PairCmp{&ord}};
    std::unordered_set<std::uint64_t> done;

    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (basis[i].zero()) continue;
            queue.insert(Pair{lcm_exponents(basis[i].lm(), basis[j].lm()), i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

    int batch_limit = 1;
#ifdef _OPENMP
    if (exec == ExecMode::Parallel) batch_limit = std::max(1, omp_get_max_threads() * 2);
#else
    (void)exec;
#endif

    std::vector<Pair> batch;
    std::vector<OP> reduced;
    while (!queue.empty()) {
        batch.clear();
        while (!queue.empty() && static_cast<int>(batch.size()) < batch_limit) {
            Pair p = *queue.begin();
            queue.erase(queue.begin());
            done.insert(pair_key(p.i, p.j));
            if (coprime_leads(basis[p.i].lm(), basis[p.j].lm())) continue;
            bool chained = false;
            for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
                if (k == p.i || k == p.j || basis[k].zero()) continue;
                if (!monomial_divides(basis[k].lm(), p.lcm)) continue;
                if (done.count(pair_key(std::min(p.i, k), std::max(p.i, k))) &&
                    done.count(pair_key(std::min(p.j, k), std::max(p.j, k)))) {
                    chained = true;
                    break;
                }
            }
            if (!chained) batch.push_back(std::move(p));
        }
        if (batch.empty()) continue;

        reduced.assign(batch.size(), OP{});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == ExecMode::Parallel && batch.size() > 1)
#endif
        for (std::size_t k = 0; k < batch.size(); ++k) {
            const Pair& p = batch[k];
            const OP& f = basis[p.i];
            const OP& g = basis[p.j];
            Exponents shift_f(p.lcm.size()), shift_g(p.lcm.size());
            for (std::size_t v = 0; v < p.lcm.size(); ++v) {
                shift_f[v] = p.lcm[v] - f.lm()[v];
                shift_g[v] = p.lcm[v] - g.lm()[v];
            }
            // S(f,g) = x^{lcm-lt f}/lc f * f - x^{lcm-lt g}/lc g * g
            OP zero;
            OP s = subtract_multiple(zero, -1 / f.lc(), shift_f, f, ord);
            s = subtract_multiple(s, 1 / g.lc(), shift_g, g, ord);
            reduced[k] = reduce_full(std::move(s), basis, ord);
        }

        for (std::size_t k = 0; k < batch.size(); ++k) {
            if (reduced[k].zero()) continue;
            // the basis may have grown since the frozen reduction
            OP r = reduce_full(std::move(reduced[k]), basis, ord);
            if (r.zero()) continue;
            normalize_content(r);
            basis.push_back(std::move(r));
            push_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }
    return basis;
}

// Minimalize and fully inter-reduce; monic generators sorted by ascending
// leading monomial. This is the unique reduced basis of the ideal.
std::vector<OP> reduce_basis(std::vector<OP> basis, const MonomialOrder& ord) {
    std::erase_if(basis, [](const OP& p) { return p.zero(); });
    std::sort(basis.begin(), basis.end(),
              [&](const OP& a, const OP& b) { return ord.less(a.lm(), b.lm()); });
    // minimal: drop any generator whose lead is divisible by another's
    std::vector<OP> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (monomial_divides(basis[j].lm(), basis[i].lm()) &&
                (basis[j].lm() != basis[i].lm() || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(std::move(basis[i]));
    }
    std::vector<OP> out(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OP> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OP r = reduce_full(minimal[i], others, ord);
        make_monic(r);
        out[i] = std::move(r);
    }
    std::erase_if(out, [](const OP& p) { return p.zero(); });
    std::sort(out.begin(), out.end(),
              [&](const OP& a, const OP& b) { return ord.less(a.lm(), b.lm()); });
    return out;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order,
                         ExecMode exec) {
    int nvars = 0;
    std::vector<OP> start;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (start.empty())
            nvars = g.nvars();
        else if (g.nvars() != nvars)
            throw InputError("nvars-mismatch: buchberger generators");
        OP p = to_op(g, order);
        normalize_content(p);
        start.push_back(std::move(p));
    }
    if (!gens.empty() && start.empty()) nvars = gens.front().nvars();
    GroebnerBasis gb;
    gb.order = order;
    gb.nvars = nvars;
    if (start.empty()) return gb;  // zero ideal
    auto basis = reduce_basis(buchberger_core(std::move(start), order, exec), order);
    gb.gens.reserve(basis.size());
    for (const auto& p : basis) gb.gens.push_back(from_op(p, nvars));
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (gb.gens.empty()) return p;
    if (p.nvars() != gb.nvars) throw InputError("nvars-mismatch: normal_form");
    std::vector<OP> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens) basis.push_back(to_op(g, gb.order));
    OP r = reduce_full(to_op(p, gb.order), basis, gb.order);
    return from_op(r, p.nvars());
}

// ---------------------------------------------------------------------------
// Hilbert series of a monomial ideal, via the colon recursion
//   HN(J + (m)) = HN(J) - t^{deg m} HN(J : m)
// on minimal generating sets. HN is the numerator over (1-t)^nvars.
// ---------------------------------------------------------------------------

namespace {

using Mons = std::vector<Exponents>;

Mons minimalize(Mons gens) {
    std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
        return total_degree(a) < total_degree(b);
    });
    Mons out;
    for (const auto& m : gens) {
        bool divisible = false;
        for (const auto& g : out)
            if (monomial_divides(g, m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    return out;
}

using TPoly = std::vector<Int>;  // coefficients in t, index = power

void tpoly_sub_shifted(TPoly& a, const TPoly& b, long shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Int(0));
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= b[k];
}

TPoly hilbert_numerator(const Mons& gens) {
    if (gens.empty()) return {Int(1)};
    for (const auto& m : gens)
        if (total_degree(m) == 0) return {};  // unit ideal
    if (gens.size() == 1) {
        TPoly r(total_degree(gens[0]) + 1, Int(0));
        r[0] = 1;
        r[total_degree(gens[0])] = -1;
        return r;
    }
    Mons rest(gens.begin(), gens.end() - 1);
    const Exponents& m = gens.back();
    Mons colon;
    colon.reserve(rest.size());
    for (const auto& g : rest) {
        Exponents q(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) q[v] = std::max(g[v] - m[v], 0);
        colon.push_back(std::move(q));
    }
    TPoly a = hilbert_numerator(rest);
    TPoly b = hilbert_numerator(minimalize(std::move(colon)));
    tpoly_sub_shifted(a, b, total_degree(m));
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

}  // namespace

std::pair<int, long> hilbert_dimension_degree(const GroebnerBasis& gb) {
    for (const auto& g : gb.gens)
        if (!g.homogeneous_degree())
            throw InputError("not-homogeneous: hilbert_dimension_degree generator");
    int nvars = gb.nvars;
    if (nvars == 0 && !gb.gens.empty()) nvars = gb.gens.front().nvars();
    if (gb.gens.empty()) {
        // zero ideal: all of P^n
        if (nvars == 0) throw InputError("empty-list: hilbert of untyped zero ideal");
        return {nvars - 1, 1};
    }
    Mons lts;
    lts.reserve(gb.gens.size());
    for (const auto& g : gb.gens) {
        OP p = to_op(g, gb.order);
        lts.push_back(p.lm());
    }
    TPoly hn = hilbert_numerator(minimalize(std::move(lts)));
    if (hn.empty()) return {-1, 0};  // unit ideal
    // factor out (1-t)^e; dimension and degree come from the reduced form
    int cancels = 0;
    while (true) {
        Int at_one(0);
        for (const auto& c : hn) at_one += c;
        if (at_one != 0) break;
        // divide by (1-t): prefix sums
        TPoly q(hn.size() - 1, Int(0));
        Int run(0);
        for (std::size_t k = 0; k + 1 < hn.size(); ++k) {
            run += hn[k];
            q[k] = run;
        }
        hn = std::move(q);
        ++cancels;
        if (hn.empty()) return {-1, 0};
    }
    int krull = nvars - cancels;  // affine dimension of the cone
    if (krull <= 0) return {-1, 0};
    Int deg(0);
    for (const auto& c : hn) deg += c;
    if (!deg.fits_slong_p()) throw InputError("schema-error: degree overflow");
    return {krull - 1, deg.get_si()};
}

std::vector<Polynomial> saturate_by_poly(const std::vector<Polynomial>& gens,
                                         const Polynomial& h, ExecMode exec) {
    if (h.is_zero()) throw InputError("zero-polynomial: saturation by zero");
    int nvars = h.nvars();
    std::vector<Polynomial> extended;
    extended.reserve(gens.size() + 1);
    for (const auto& g : gens) extended.push_back(insert_variable(g, 0));
    // t*h - 1 with t the leading block variable
    Polynomial t = Polynomial::variable(nvars + 1, 0);
    extended.push_back(t * insert_variable(h, 0) - Polynomial::constant(nvars + 1, 1));
    GroebnerBasis gb = buchberger(extended, MonomialOrder::eliminate(1), exec);
    std::vector<Polynomial> elim;
    for (const auto& g : gb.gens) {
        bool tfree = true;
        for (const auto& [e, c] : g.terms())
            if (e[0] != 0) {
                tfree = false;
                break;
            }
        if (tfree) elim.push_back(remove_variable(g, 0));
    }
    if (elim.empty()) return {};  // saturation is the zero ideal
    // re-reduce in plain grevlex for a canonical, homogeneous answer
    return buchberger(elim, MonomialOrder::grevlex(), exec).gens;
}

long quotient_dimension(const std::vector<Polynomial>& gens, ExecMode exec) {
    GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex(), exec);
    if (gb.gens.empty()) throw InputError("not-zero-dimensional: zero ideal");
    if (gb.is_unit_ideal()) return 0;
    int nvars = gb.nvars;
    Mons lts;
    for (const auto& g : gb.gens) lts.push_back(to_op(g, gb.order).lm());
    // zero-dimensional iff some pure power of every variable leads
    std::vector<long> bound(nvars, -1);
    for (const auto& m : lts) {
        int nz = -1;
        bool pure = true;
        for (int v = 0; v < nvars; ++v) {
            if (m[v] == 0) continue;
            if (nz >= 0) {
                pure = false;
                break;
            }
            nz = v;
        }
        if (pure && nz >= 0 && (bound[nz] < 0 || m[nz] < bound[nz])) bound[nz] = m[nz];
    }
    for (int v = 0; v < nvars; ++v)
        if (bound[v] < 0) throw InputError("not-zero-dimensional: quotient_dimension");
    // walk the finite box and count standard monomials
    long count = 0;
    Exponents e(nvars, 0);
    while (true) {
        bool standard = true;
        for (const auto& m : lts)
            if (monomial_divides(m, e)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        int v = 0;
        while (v < nvars) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return count;
}

bool radical_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                        ExecMode exec) {
    if (p.is_zero()) return true;  // 0 lies in every radical
    int nvars = p.nvars();
    std::vector<Polynomial> extended;
    extended.reserve(gens.size() + 1);
    for (const auto& g : gens) extended.push_back(insert_variable(g, 0));
    Polynomial t = Polynomial::variable(nvars + 1, 0);
    extended.push_back(t * insert_variable(p, 0) - Polynomial::constant(nvars + 1, 1));
    return buchberger(extended, MonomialOrder::grevlex(), exec).is_unit_ideal();
}

}  // namespace charclass
