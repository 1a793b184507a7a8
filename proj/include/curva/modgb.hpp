#pragma once

// Groebner machinery for submodules of free modules R^m over the commutative
// polynomial rings the ring-level engine handles. Term-over-position orders,
// Buchberger for vectors, syzygies via the unit-augmentation trick, kernels
// of polynomial matrices, and per-position staircase dimension counts. This
// is the workhorse behind cohomology presented as a module rather than a
// bare number.

#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "curva/groebner.hpp"

namespace curva {

// An element of R^m: one polynomial per position. All positions share the
// context; the vector length is the ambient rank.
template <class K>
using ModVec = std::vector<GCPoly<K>>;

// Term-over-position order. Ring monomials are compared first, ties go to
// the lower position. When lead_block = b > 0 the first b positions dominate
// the rest outright, which turns a Groebner run into the elimination that
// syzygy and membership computations need.
struct ModOrder {
    OrderSpec ring = {};
    std::size_t lead_block = 0;
};

inline int cmp_mod_term(const ModOrder& o, const Mono& am, std::size_t ap,
                        const Mono& bm, std::size_t bp) {
    bool alead = ap < o.lead_block;
    bool blead = bp < o.lead_block;
    if (alead != blead) return alead ? 1 : -1;
    int c = cmp_mono(o.ring, am, bm);
    if (c != 0) return c;
    if (ap != bp) return ap < bp ? 1 : -1;
    return 0;
}

template <class K>
bool mod_is_zero(const ModVec<K>& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

template <class K>
ModVec<K> mod_zero(const CtxPtr& ctx, std::size_t rank) {
    return ModVec<K>(rank, GCPoly<K>::zero(ctx));
}

// Leading (monomial, position, coefficient) of a nonzero vector.
template <class K>
std::tuple<Mono, std::size_t, K> mod_leading_term(const ModOrder& o,
                                                  const ModVec<K>& v) {
    const Mono* bm = nullptr;
    std::size_t bp = 0;
    const K* bc = nullptr;
    for (std::size_t p = 0; p < v.size(); ++p)
        for (const auto& [m, c] : v[p].terms())
            if (!bm || cmp_mod_term(o, m, p, *bm, bp) > 0) {
                bm = &m;
                bp = p;
                bc = &c;
            }
    if (!bm) throw std::invalid_argument("zero vector has no leading term");
    return {*bm, bp, *bc};
}

namespace detail {

// v += s * x^q * g, componentwise.
template <class K>
void mod_axpy(ModVec<K>& v, const K& s, const Mono& q, const ModVec<K>& g) {
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (g[p].is_zero()) continue;
        v[p] += GCPoly<K>::monomial(v[p].ctx(), q, s) * g[p];
    }
}

}  // namespace detail

// Full normal form of v against the list gs: no term of the result sits in
// the leading-term module of gs.
template <class K>
ModVec<K> mod_reduce_full(const ModOrder& ord, ModVec<K> v,
                          const std::vector<ModVec<K>>& gs) {
    std::vector<std::tuple<Mono, std::size_t, K>> lts;
    lts.reserve(gs.size());
    for (const auto& g : gs) lts.push_back(mod_leading_term(ord, g));
    ModVec<K> r = mod_zero<K>(v.empty() ? CtxPtr{} : v[0].ctx(), v.size());
    while (!mod_is_zero(v)) {
        auto [lm, lp, lc] = mod_leading_term(ord, v);
        bool hit = false;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            const auto& [gm, gp, gc] = lts[i];
            if (gp != lp || !mono_divides(gm, lm)) continue;
            K s = -(lc / gc);
            detail::mod_axpy(v, s, mono_quot(lm, gm), gs[i]);
            hit = true;
            break;
        }
        if (!hit) {
            auto piece = GCPoly<K>::monomial(v[lp].ctx(), lm, lc);
            r[lp] += piece;
            v[lp] -= piece;
        }
    }
    return r;
}

// Reduced module Groebner basis: monic, auto-reduced, leading terms pairwise
// non-divisible, sorted by increasing leading term. S-pairs only make sense
// for equal leading positions; no product criterion is applied since it is
// unsound for modules.
template <class K>
std::vector<ModVec<K>> mod_buchberger(std::vector<ModVec<K>> gens,
                                      const ModOrder& ord) {
    std::vector<ModVec<K>> G;
    for (auto& g : gens)
        if (!mod_is_zero(g)) G.push_back(std::move(g));

    struct SPair {
        std::size_t i, j;
        Mono lcm;
        std::size_t pos;
        int deg;
    };
    std::vector<SPair> pairs;
    auto push_pairs = [&](std::size_t j) {
        auto [mj, pj, cj] = mod_leading_term(ord, G[j]);
        (void)cj;
        for (std::size_t i = 0; i < j; ++i) {
            auto [mi, pi, ci] = mod_leading_term(ord, G[i]);
            (void)ci;
            if (pi != pj) continue;
            Mono l = mono_lcm(mi, mj);
            pairs.push_back({i, j, l, pi, l.weight()});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto& a = pairs[k];
            const auto& b = pairs[best];
            if (a.deg != b.deg) {
                if (a.deg < b.deg) best = k;
                continue;
            }
            int c = cmp_mono(ord.ring, a.lcm, b.lcm);
            if (c != 0) {
                if (c < 0) best = k;
                continue;
            }
            if (std::tie(a.pos, a.i, a.j) < std::tie(b.pos, b.i, b.j)) best = k;
        }
        SPair pr = pairs[best];
        pairs.erase(pairs.begin() + best);

        auto [mi, pi, ci] = mod_leading_term(ord, G[pr.i]);
        auto [mj, pj, cj] = mod_leading_term(ord, G[pr.j]);
        (void)pi;
        (void)pj;
        ModVec<K> s = mod_zero<K>(G[pr.i][0].ctx(), G[pr.i].size());
        K nci = -ci;
        detail::mod_axpy(s, cj, mono_quot(pr.lcm, mi), G[pr.i]);
        detail::mod_axpy(s, nci, mono_quot(pr.lcm, mj), G[pr.j]);
        ModVec<K> h = mod_reduce_full(ord, std::move(s), G);
        if (mod_is_zero(h)) continue;
        auto [hm, hp, hc] = mod_leading_term(ord, h);
        (void)hm;
        (void)hp;
        K inv = FieldOps<K>::inv(hc);
        for (auto& p : h) p = p.scaled(inv);
        G.push_back(std::move(h));
        push_pairs(G.size() - 1);
    }

    // Minimalize, tail-reduce, monic, sort.
    std::vector<ModVec<K>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        auto [mi, pi, ci] = mod_leading_term(ord, G[i]);
        (void)ci;
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            auto [mj, pj, cj] = mod_leading_term(ord, G[j]);
            (void)cj;
            if (pj != pi || !mono_divides(mj, mi)) continue;
            redundant = (mj != mi) || (j < i);
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModVec<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        if (!others.empty())
            minimal[i] = mod_reduce_full(ord, minimal[i], others);
        auto [lm, lp, lc] = mod_leading_term(ord, minimal[i]);
        (void)lm;
        (void)lp;
        K inv = FieldOps<K>::inv(lc);
        for (auto& p : minimal[i]) p = p.scaled(inv);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const ModVec<K>& a, const ModVec<K>& b) {
                  auto [am, ap, ac] = mod_leading_term(ord, a);
                  auto [bm, bp, bc] = mod_leading_term(ord, b);
                  (void)ac;
                  (void)bc;
                  return cmp_mod_term(ord, am, ap, bm, bp) < 0;
              });
    return minimal;
}

// First syzygies of vs in R^m: generators of { lambda : sum lambda_i vs_i = 0 }
// as a submodule of R^k. Computed by a Groebner run on (vs_i, unit_i) in
// R^(m+k) under an order whose first m positions dominate; the basis elements
// that land entirely in the unit block are the syzygies.
template <class K>
std::vector<ModVec<K>> syzygies(const CtxPtr& ctx,
                                const std::vector<ModVec<K>>& vs) {
    std::size_t k = vs.size();
    if (k == 0) return {};
    std::size_t m = vs[0].size();
    std::vector<ModVec<K>> aug;
    for (std::size_t i = 0; i < k; ++i) {
        if (vs[i].size() != m)
            throw std::invalid_argument("syzygy input vectors of mixed rank");
        ModVec<K> a = vs[i];
        for (std::size_t j = 0; j < k; ++j)
            a.push_back(i == j ? GCPoly<K>::constant(ctx, FieldOps<K>::one())
                               : GCPoly<K>::zero(ctx));
        aug.push_back(std::move(a));
    }
    auto G = mod_buchberger(std::move(aug), ModOrder{{}, m});
    std::vector<ModVec<K>> out;
    for (const auto& g : G) {
        bool upper = false;
        for (std::size_t p = 0; p < m && !upper; ++p) upper = !g[p].is_zero();
        if (upper) continue;
        out.emplace_back(g.begin() + static_cast<long>(m), g.end());
    }
    return out;
}

// Kernel of the module map R^cols -> R^rows given by the matrix A, as a
// generating set of vectors in R^cols.
template <class K>
std::vector<ModVec<K>> matrix_kernel(
    const CtxPtr& ctx, const std::vector<std::vector<GCPoly<K>>>& A) {
    if (A.empty()) return {};
    std::size_t rows = A.size(), cols = A[0].size();
    std::vector<ModVec<K>> columns;
    for (std::size_t j = 0; j < cols; ++j) {
        ModVec<K> col;
        for (std::size_t i = 0; i < rows; ++i) col.push_back(A[i][j]);
        columns.push_back(std::move(col));
    }
    return syzygies(ctx, columns);
}

// Expresses v over the listed generators modulo the span of bnds: returns
// coords with v = sum coords_i gens_i + (element of <bnds>), or nothing when
// v is outside. Deterministic; coords come back normal-formed against the
// syzygies the run discovers, so equal classes get equal coords.
template <class K>
std::optional<ModVec<K>> express_over(const CtxPtr& ctx,
                                      const std::vector<ModVec<K>>& gens,
                                      const std::vector<ModVec<K>>& bnds,
                                      const ModVec<K>& v) {
    std::size_t k = gens.size();
    std::size_t m = v.size();
    std::vector<ModVec<K>> aug;
    for (std::size_t i = 0; i < k; ++i) {
        ModVec<K> a = gens[i];
        for (std::size_t j = 0; j < k; ++j)
            a.push_back(i == j ? GCPoly<K>::constant(ctx, FieldOps<K>::one())
                               : GCPoly<K>::zero(ctx));
        aug.push_back(std::move(a));
    }
    for (const auto& b : bnds) {
        ModVec<K> a = b;
        for (std::size_t j = 0; j < k; ++j) a.push_back(GCPoly<K>::zero(ctx));
        aug.push_back(std::move(a));
    }
    if (aug.empty()) {
        if (mod_is_zero(v)) return ModVec<K>{};
        return std::nullopt;
    }
    auto G = mod_buchberger(std::move(aug), ModOrder{{}, m});
    ModVec<K> probe = v;
    for (std::size_t j = 0; j < k; ++j) probe.push_back(GCPoly<K>::zero(ctx));
    ModVec<K> nf = mod_reduce_full(ModOrder{{}, m}, std::move(probe), G);
    for (std::size_t p = 0; p < m; ++p)
        if (!nf[p].is_zero()) return std::nullopt;
    ModVec<K> coords;
    for (std::size_t j = 0; j < k; ++j) coords.push_back(-nf[m + j]);
    return coords;
}

// Dimension over the coefficient field of R^rank / <relations>, via one ring
// staircase per position. Infinite positions are reported with the ring-level
// witnesses attached.
struct ModQuotientInfo {
    bool finite = false;
    std::size_t dimension = 0;
    // (position, standard monomial) cells when finite
    std::vector<std::pair<std::size_t, Mono>> staircase;
    // positions whose slice is infinite, with the directions that stay free
    std::vector<std::pair<std::size_t, std::vector<std::string>>> infinite_at;
};

template <class K>
ModQuotientInfo module_quotient(const CtxPtr& ctx, std::size_t rank,
                                const std::vector<ModVec<K>>& relations,
                                const ModOrder& ord = {}) {
    auto G = mod_buchberger(relations, ord);
    std::vector<std::vector<Mono>> lms(rank);
    for (const auto& g : G) {
        auto [m, p, c] = mod_leading_term(ord, g);
        (void)c;
        lms[p].push_back(m);
    }
    ModQuotientInfo out;
    out.finite = true;
    for (std::size_t p = 0; p < rank; ++p) {
        QuotientInfo q = staircase_of_lms(ctx, ord.ring, lms[p]);
        if (!q.finite) {
            out.finite = false;
            out.infinite_at.push_back({p, q.no_pure_power});
            continue;
        }
        for (auto& m : q.staircase) out.staircase.push_back({p, m});
    }
    if (!out.finite) {
        out.staircase.clear();
        out.dimension = 0;
        return out;
    }
    out.dimension = out.staircase.size();
    return out;
}

}  // namespace curva
