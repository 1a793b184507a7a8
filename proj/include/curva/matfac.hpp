#pragma once

// Two-periodic matrix factorizations of a potential w over a commutative
// polynomial ring: d0 and d1 with both composites equal to w times the
// identity. Provides the Koszul construction, Hom complexes with their
// squaring-to-zero differential, cohomology presented as a module via the
// syzygy machinery, the induced product on cohomology classes, and weight
// assignments for a torus action on the variables.
//
// Conventions. d0 is r x s and maps the odd summand to the even one; d1 is
// s x r and maps back. A morphism of parity 0 is a pair (f00, f11), one of
// parity 1 a pair (g01, g10), flattened row-major in that slot order; the
// differential is d_N f - (-1)^|f| f d_M componentwise.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curva/modgb.hpp"

namespace curva {

template <class K>
using PolyMat = std::vector<std::vector<GCPoly<K>>>;

template <class K>
PolyMat<K> poly_mat_zero(const CtxPtr& ctx, std::size_t rows, std::size_t cols) {
    return PolyMat<K>(rows, std::vector<GCPoly<K>>(cols, GCPoly<K>::zero(ctx)));
}

template <class K>
PolyMat<K> poly_mat_mul(const CtxPtr& ctx, const PolyMat<K>& A, const PolyMat<K>& B) {
    std::size_t n = A.size();
    std::size_t m = B.size();
    std::size_t p = m == 0 ? 0 : B[0].size();
    PolyMat<K> C = poly_mat_zero<K>(ctx, n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            if (A[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < p; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

template <class K>
struct MatrixFactorization {
    CtxPtr ctx;
    GCPoly<K> w;
    PolyMat<K> d0;  // r x s, odd summand to even
    PolyMat<K> d1;  // s x r, even summand to odd
    // Optional torus weights (rows of d0, then columns) attached by callers
    // that work equivariantly; construction does not fill them in.
    std::optional<std::pair<std::vector<long>, std::vector<long>>> weights;

    std::size_t rank_even() const { return d0.size(); }
    std::size_t rank_odd() const { return d1.size(); }
};

template <class K>
MatrixFactorization<K> make_mf(CtxPtr ctx, GCPoly<K> w, PolyMat<K> d0,
                               PolyMat<K> d1) {
    if (!ctx->all_even() || ctx->t_mode != TMode::none)
        throw std::invalid_argument(
            "matrix factorizations live over even variables with t in the coefficients");
    std::size_t r = d0.size(), s = d1.size();
    for (const auto& row : d0)
        if (row.size() != s)
            throw std::invalid_argument("d0 must be rectangular of shape r x s");
    for (const auto& row : d1)
        if (row.size() != r)
            throw std::invalid_argument("d1 must be rectangular of shape s x r");

    auto check = [&](const PolyMat<K>& prod, std::size_t n, const char* label) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                GCPoly<K> want = i == j ? w : GCPoly<K>::zero(ctx);
                if (!(prod[i][j] == want))
                    throw std::invalid_argument(
                        std::string("factorization identity fails: (") + label +
                        " - w*I)[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] = " + (prod[i][j] - want).str());
            }
    };
    check(poly_mat_mul(ctx, d0, d1), r, "d0*d1");
    check(poly_mat_mul(ctx, d1, d0), s, "d1*d0");
    return {std::move(ctx), std::move(w), std::move(d0), std::move(d1), {}};
}

// Koszul-type factorization of w = sum h_i w_i on the exterior algebra over
// one generator per summand: the differential is contraction by (h_i) plus
// wedging with sum w_i theta_i. Basis: subsets ordered by (size, bitmask),
// split into even and odd cardinality.
template <class K>
MatrixFactorization<K> koszul_mf(const CtxPtr& ctx,
                                 const std::vector<GCPoly<K>>& h,
                                 const std::vector<GCPoly<K>>& w_parts) {
    std::size_t n = h.size();
    if (n == 0 || w_parts.size() != n)
        throw std::invalid_argument(
            "koszul_mf needs matching nonempty lists of factors and cofactors");
    GCPoly<K> w = GCPoly<K>::zero(ctx);
    for (std::size_t i = 0; i < n; ++i) w += h[i] * w_parts[i];

    std::vector<unsigned> even, odd;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        (__builtin_popcount(mask) % 2 == 0 ? even : odd).push_back(mask);
    auto by_size = [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    };
    std::sort(even.begin(), even.end(), by_size);
    std::sort(odd.begin(), odd.end(), by_size);
    std::map<unsigned, std::size_t> even_at, odd_at;
    for (std::size_t i = 0; i < even.size(); ++i) even_at[even[i]] = i;
    for (std::size_t i = 0; i < odd.size(); ++i) odd_at[odd[i]] = i;

    // column col describes d(basis element mask); rows collect the images
    auto fill = [&](PolyMat<K>& mat, const std::map<unsigned, std::size_t>& row_at,
                    unsigned mask, std::size_t col) {
        for (std::size_t i = 0; i < n; ++i) {
            unsigned bit = 1u << i;
            int below = __builtin_popcount(mask & (bit - 1));
            K sign = FieldOps<K>::from_long(below % 2 == 0 ? 1 : -1);
            if (mask & bit)  // contraction removes theta_i
                mat[row_at.at(mask ^ bit)][col] += h[i].scaled(sign);
            else  // wedge inserts theta_i
                mat[row_at.at(mask | bit)][col] += w_parts[i].scaled(sign);
        }
    };
    PolyMat<K> d0 = poly_mat_zero<K>(ctx, even.size(), odd.size());
    for (std::size_t c = 0; c < odd.size(); ++c) fill(d0, even_at, odd[c], c);
    PolyMat<K> d1 = poly_mat_zero<K>(ctx, odd.size(), even.size());
    for (std::size_t c = 0; c < even.size(); ++c) fill(d1, odd_at, even[c], c);
    return make_mf(ctx, std::move(w), std::move(d0), std::move(d1));
}

// Shape bookkeeping for Hom(M, N) and the flat coordinate layout.
struct HomShape {
    std::size_t rN, sN, rM, sM;

    std::size_t even_rank() const { return rN * rM + sN * sM; }
    std::size_t odd_rank() const { return sN * rM + rN * sM; }
    // flat positions of the four blocks
    std::size_t at00(std::size_t i, std::size_t j) const { return i * rM + j; }
    std::size_t at11(std::size_t i, std::size_t j) const {
        return rN * rM + i * sM + j;
    }
    std::size_t at01(std::size_t i, std::size_t j) const { return i * rM + j; }
    std::size_t at10(std::size_t i, std::size_t j) const {
        return sN * rM + i * sM + j;
    }
};

template <class K>
struct HomComplex {
    CtxPtr ctx;
    HomShape shape;
    PolyMat<K> d_even;  // even morphisms to odd ones
    PolyMat<K> d_odd;   // odd morphisms to even ones
};

template <class K>
HomComplex<K> hom_complex(const MatrixFactorization<K>& M,
                          const MatrixFactorization<K>& N) {
    if (!same_ctx(M.ctx, N.ctx))
        throw std::invalid_argument("Hom complex needs a common ring");
    if (!(M.w == N.w))
        throw std::invalid_argument("Hom complex needs equal potentials");
    const CtxPtr& ctx = M.ctx;
    HomShape sh{N.rank_even(), N.rank_odd(), M.rank_even(), M.rank_odd()};

    PolyMat<K> A = poly_mat_zero<K>(ctx, sh.odd_rank(), sh.even_rank());
    // (D f)01 = d1N f00 - f11 d1M
    for (std::size_t a = 0; a < sh.sN; ++a)
        for (std::size_t b = 0; b < sh.rM; ++b) {
            std::size_t row = sh.at01(a, b);
            for (std::size_t i = 0; i < sh.rN; ++i)
                A[row][sh.at00(i, b)] += N.d1[a][i];
            for (std::size_t i = 0; i < sh.sM; ++i)
                A[row][sh.at11(a, i)] -= M.d1[i][b];
        }
    // (D f)10 = d0N f11 - f00 d0M
    for (std::size_t a = 0; a < sh.rN; ++a)
        for (std::size_t b = 0; b < sh.sM; ++b) {
            std::size_t row = sh.at10(a, b);
            for (std::size_t i = 0; i < sh.sN; ++i)
                A[row][sh.at11(i, b)] += N.d0[a][i];
            for (std::size_t i = 0; i < sh.rM; ++i)
                A[row][sh.at00(a, i)] -= M.d0[i][b];
        }

    PolyMat<K> B = poly_mat_zero<K>(ctx, sh.even_rank(), sh.odd_rank());
    // (D g)00 = d0N g01 + g10 d1M
    for (std::size_t a = 0; a < sh.rN; ++a)
        for (std::size_t b = 0; b < sh.rM; ++b) {
            std::size_t row = sh.at00(a, b);
            for (std::size_t i = 0; i < sh.sN; ++i)
                B[row][sh.at01(i, b)] += N.d0[a][i];
            for (std::size_t i = 0; i < sh.sM; ++i)
                B[row][sh.at10(a, i)] += M.d1[i][b];
        }
    // (D g)11 = d1N g10 + g01 d0M
    for (std::size_t a = 0; a < sh.sN; ++a)
        for (std::size_t b = 0; b < sh.sM; ++b) {
            std::size_t row = sh.at11(a, b);
            for (std::size_t i = 0; i < sh.rN; ++i)
                B[row][sh.at10(i, b)] += N.d1[a][i];
            for (std::size_t i = 0; i < sh.rM; ++i)
                B[row][sh.at01(a, i)] += M.d0[i][b];
        }
    return {ctx, sh, std::move(A), std::move(B)};
}

// Cohomology of one parity, presented by generators and relations: generator
// i is the cocycle `generators[i]` (flat hom coordinates); the relation
// module lives in R^rank and comes back as a reduced module basis.
template <class K>
struct ModulePresentation {
    std::size_t rank = 0;
    std::vector<ModVec<K>> generators;
    std::vector<ModVec<K>> relations;
    ModQuotientInfo quotient;
};

template <class K>
struct MfCohomology {
    CtxPtr ctx;
    HomShape shape;
    ModulePresentation<K> even, odd;
    std::vector<ModVec<K>> even_boundaries;  // image of the odd differential
    std::vector<ModVec<K>> odd_boundaries;   // image of the even differential
};

namespace detail {

template <class K>
std::vector<ModVec<K>> matrix_columns(const PolyMat<K>& A) {
    std::vector<ModVec<K>> cols;
    if (A.empty()) return cols;
    for (std::size_t j = 0; j < A[0].size(); ++j) {
        ModVec<K> col;
        for (std::size_t i = 0; i < A.size(); ++i) col.push_back(A[i][j]);
        cols.push_back(std::move(col));
    }
    return cols;
}

// Strips redundant generators: a relation with a constant coefficient at
// some position lets that generator be rewritten in terms of the others, so
// it (and the relation) can go. Deterministic first-hit scan.
template <class K>
void minimize_presentation(const CtxPtr& ctx, std::vector<ModVec<K>>& gens,
                           std::vector<ModVec<K>>& rels) {
    for (bool again = true; again;) {
        again = false;
        for (std::size_t ri = 0; ri < rels.size() && !again; ++ri) {
            for (std::size_t i = 0; i < gens.size() && !again; ++i) {
                const GCPoly<K>& c = rels[ri][i];
                if (c.is_zero() || c.size() != 1) continue;
                const auto& [m, cv] = *c.terms().begin();
                if (!m.is_one()) continue;
                K inv = FieldOps<K>::inv(cv);
                ModVec<K> pivot = rels[ri];
                for (std::size_t rj = 0; rj < rels.size(); ++rj) {
                    if (rj == ri) continue;
                    GCPoly<K> f = rels[rj][i].scaled(inv);
                    if (f.is_zero()) continue;
                    for (std::size_t p = 0; p < gens.size(); ++p)
                        rels[rj][p] -= f * pivot[p];
                }
                rels.erase(rels.begin() + static_cast<long>(ri));
                gens.erase(gens.begin() + static_cast<long>(i));
                for (auto& r : rels) r.erase(r.begin() + static_cast<long>(i));
                again = true;
            }
        }
        std::vector<ModVec<K>> kept;
        for (auto& r : rels)
            if (!mod_is_zero(r)) kept.push_back(std::move(r));
        rels = std::move(kept);
        (void)ctx;
    }
}

template <class K>
ModulePresentation<K> present_quotient(const CtxPtr& ctx,
                                       std::vector<ModVec<K>> kernel_gens,
                                       const std::vector<ModVec<K>>& boundaries) {
    // relations among the kernel generators modulo the boundaries: syzygies
    // of the concatenated family, projected to the kernel coordinates
    std::vector<ModVec<K>> family = kernel_gens;
    for (const auto& b : boundaries) family.push_back(b);
    std::vector<ModVec<K>> rels;
    for (const auto& syz : syzygies(ctx, family)) {
        ModVec<K> lam(syz.begin(),
                      syz.begin() + static_cast<long>(kernel_gens.size()));
        if (!mod_is_zero(lam)) rels.push_back(std::move(lam));
    }
    minimize_presentation(ctx, kernel_gens, rels);
    ModulePresentation<K> out;
    out.rank = kernel_gens.size();
    out.generators = std::move(kernel_gens);
    out.relations = mod_buchberger(rels, ModOrder{});
    out.quotient = module_quotient(ctx, out.rank, out.relations);
    return out;
}

}  // namespace detail

template <class K>
MfCohomology<K> hom_cohomology(const MatrixFactorization<K>& M,
                               const MatrixFactorization<K>& N) {
    auto H = hom_complex(M, N);
    MfCohomology<K> out;
    out.ctx = H.ctx;
    out.shape = H.shape;
    out.even_boundaries = detail::matrix_columns(H.d_odd);
    out.odd_boundaries = detail::matrix_columns(H.d_even);
    out.even = detail::present_quotient(H.ctx, matrix_kernel(H.ctx, H.d_even),
                                        out.even_boundaries);
    out.odd = detail::present_quotient(H.ctx, matrix_kernel(H.ctx, H.d_odd),
                                       out.odd_boundaries);
    return out;
}

// Composition a after b of endomorphism representatives in flat coordinates,
// for an endomorphism complex (square shape). Returns (parity, coordinates).
template <class K>
std::pair<int, ModVec<K>> compose_hom(const CtxPtr& ctx, const HomShape& sh,
                                      int pa, const ModVec<K>& a, int pb,
                                      const ModVec<K>& b) {
    if (sh.rN != sh.rM || sh.sN != sh.sM)
        throw std::invalid_argument("composition table needs an endomorphism complex");
    std::size_t r = sh.rN, s = sh.sN;
    auto block = [&](const ModVec<K>& v, int which, std::size_t i, std::size_t j)
        -> const GCPoly<K>& {
        switch (which) {
            case 0: return v[sh.at00(i, j)];
            case 1: return v[sh.at11(i, j)];
            case 2: return v[sh.at01(i, j)];
            default: return v[sh.at10(i, j)];
        }
    };
    int pc = (pa + pb) % 2;
    ModVec<K> out = mod_zero<K>(ctx, pc == 0 ? sh.even_rank() : sh.odd_rank());
    // target block <- a block, b block, inner dimension
    struct Rule {
        int dst, lhs, rhs;
        std::size_t rows, inner, cols;
    };
    std::vector<Rule> rules;
    if (pa == 0 && pb == 0)
        rules = {{0, 0, 0, r, r, r}, {1, 1, 1, s, s, s}};
    else if (pa == 1 && pb == 1)
        rules = {{0, 3, 2, r, s, r}, {1, 2, 3, s, r, s}};
    else if (pa == 0 && pb == 1)
        rules = {{2, 1, 2, s, s, r}, {3, 0, 3, r, r, s}};
    else
        rules = {{2, 2, 0, s, r, r}, {3, 3, 1, r, s, s}};
    for (const auto& ru : rules)
        for (std::size_t i = 0; i < ru.rows; ++i)
            for (std::size_t j = 0; j < ru.cols; ++j) {
                GCPoly<K> acc = GCPoly<K>::zero(ctx);
                for (std::size_t k = 0; k < ru.inner; ++k)
                    acc += block(a, ru.lhs, i, k) * block(b, ru.rhs, k, j);
                std::size_t at = ru.dst == 0   ? sh.at00(i, j)
                                 : ru.dst == 1 ? sh.at11(i, j)
                                 : ru.dst == 2 ? sh.at01(i, j)
                                               : sh.at10(i, j);
                out[at] += acc;
            }
    return {pc, std::move(out)};
}

// The cocycle representing a coordinate combination of generators.
template <class K>
ModVec<K> representative(const CtxPtr& ctx, const ModulePresentation<K>& part,
                         const ModVec<K>& coords, std::size_t ambient_rank) {
    ModVec<K> out = mod_zero<K>(ctx, ambient_rank);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t p = 0; p < ambient_rank; ++p)
            out[p] += coords[i] * part.generators[i][p];
    return out;
}

// Product of two cohomology classes given by generator indices, expressed in
// the generator basis of the target parity. The grading sign makes the table
// associative; coordinates are normal-formed against the relations.
template <class K>
std::pair<int, ModVec<K>> cohomology_product_entry(const MfCohomology<K>& H,
                                                   int pa, std::size_t ia,
                                                   int pb, std::size_t ib) {
    const auto& A = pa == 0 ? H.even : H.odd;
    const auto& B = pb == 0 ? H.even : H.odd;
    auto [pc, comp] = compose_hom(H.ctx, H.shape, pb, B.generators[ib], pa,
                                  A.generators[ia]);
    if (pa == 1 && pb == 1)
        for (auto& p : comp) p = -p;
    const auto& target = pc == 0 ? H.even : H.odd;
    const auto& bnds = pc == 0 ? H.even_boundaries : H.odd_boundaries;
    auto coords = express_over(H.ctx, target.generators, bnds, comp);
    if (!coords)
        throw std::runtime_error(
            "product does not reduce within the computed presentation");
    if (!target.relations.empty())
        *coords = mod_reduce_full(ModOrder{}, std::move(*coords), target.relations);
    return {pc, std::move(*coords)};
}

template <class K>
struct ProductEntry {
    int left_parity;
    std::size_t left_index;
    int right_parity;
    std::size_t right_index;
    int result_parity;
    ModVec<K> coords;
};

// Full multiplication table over the generators of both parities.
template <class K>
std::vector<ProductEntry<K>> cohomology_product(const MfCohomology<K>& H) {
    std::vector<std::pair<int, std::size_t>> gens;
    for (std::size_t i = 0; i < H.even.rank; ++i) gens.push_back({0, i});
    for (std::size_t i = 0; i < H.odd.rank; ++i) gens.push_back({1, i});
    std::vector<ProductEntry<K>> table;
    for (const auto& [pa, ia] : gens)
        for (const auto& [pb, ib] : gens) {
            auto [pc, coords] = cohomology_product_entry(H, pa, ia, pb, ib);
            table.push_back({pa, ia, pb, ib, pc, std::move(coords)});
        }
    return table;
}

// Torus weights on rows and columns making both differentials homogeneous
// for a weight-per-variable action, normalized so the first row sits in
// weight zero. Rows and columns are graph nodes, nonzero entries the
// constraint edges; any conflict comes back as a certificate.
struct EquivariantAssignment {
    bool consistent = false;
    std::vector<long> row_weights, col_weights;
    std::string reason;
};

namespace detail {

template <class K>
std::optional<long> action_weight(const GCPoly<K>& p,
                                  const std::vector<long>& alpha) {
    std::optional<long> w;
    for (const auto& [m, c] : p.terms()) {
        long acc = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) acc += alpha[i] * m.e[i];
        if (w && *w != acc) return std::nullopt;
        w = acc;
    }
    return w;  // nullopt only for inhomogeneous; zero poly has no terms
}

}  // namespace detail

template <class K>
EquivariantAssignment equivariant_weights(
    const MatrixFactorization<K>& M, const std::map<std::string, long>& action) {
    std::vector<long> alpha;
    for (const auto& v : M.ctx->vars) {
        auto it = action.find(v.name);
        if (it == action.end())
            throw std::invalid_argument("action misses variable " + v.name);
        alpha.push_back(it->second);
    }
    EquivariantAssignment out;
    if (M.w.is_zero() && M.rank_even() + M.rank_odd() == 0) {
        out.consistent = true;
        return out;
    }
    auto wW = detail::action_weight(M.w, alpha);
    if (!wW && !M.w.is_zero())
        throw std::invalid_argument("potential is not homogeneous for the action");
    long W = wW.value_or(0);

    std::size_t r = M.rank_even(), s = M.rank_odd();
    // node 0..r-1: rows; r..r+s-1: columns
    std::vector<std::optional<long>> wt(r + s);
    struct Edge {
        std::size_t from, to;
        long delta;  // wt[to] = wt[from] + delta
        std::string label;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            if (!M.d0[i][j].is_zero()) {
                auto e = detail::action_weight(M.d0[i][j], alpha);
                if (!e) {
                    out.reason = "d0[" + std::to_string(i) + "][" +
                                 std::to_string(j) + "] is inhomogeneous";
                    return out;
                }
                edges.push_back({i, r + j, *e,
                                 "d0[" + std::to_string(i) + "][" + std::to_string(j) + "]"});
            }
            if (!M.d1[j][i].is_zero()) {
                auto e = detail::action_weight(M.d1[j][i], alpha);
                if (!e) {
                    out.reason = "d1[" + std::to_string(j) + "][" +
                                 std::to_string(i) + "] is inhomogeneous";
                    return out;
                }
                edges.push_back({i, r + j, W - *e,
                                 "d1[" + std::to_string(j) + "][" + std::to_string(i) + "]"});
            }
        }

    // propagate; seed each untouched component (rows first) at weight zero
    for (bool moved = true; moved;) {
        moved = false;
        std::size_t seed = r + s;
        for (std::size_t v = 0; v < r + s; ++v)
            if (!wt[v]) {
                seed = v;
                break;
            }
        if (seed < r + s) {
            wt[seed] = 0;
            moved = true;
        }
        for (bool spread = true; spread;) {
            spread = false;
            for (const auto& e : edges) {
                if (wt[e.from] && !wt[e.to]) {
                    wt[e.to] = *wt[e.from] + e.delta;
                    spread = true;
                } else if (!wt[e.from] && wt[e.to]) {
                    wt[e.from] = *wt[e.to] - e.delta;
                    spread = true;
                } else if (wt[e.from] && wt[e.to] &&
                           *wt[e.to] != *wt[e.from] + e.delta) {
                    out.reason = "conflicting weight forced by " + e.label;
                    return out;
                }
            }
        }
        if (seed == r + s) break;
    }
    out.consistent = true;
    for (std::size_t i = 0; i < r; ++i) out.row_weights.push_back(*wt[i]);
    for (std::size_t j = 0; j < s; ++j) out.col_weights.push_back(*wt[r + j]);
    return out;
}

template <class K>
nlohmann::json mf_to_json(const MatrixFactorization<K>& M) {
    auto mat = [](const PolyMat<K>& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : m) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& p : row) r.push_back(poly_to_json(p));
            rows.push_back(std::move(r));
        }
        return rows;
    };
    nlohmann::json j = {{"ring", ctx_to_json(*M.ctx)},
                        {"w", poly_to_json(M.w)},
                        {"d0", mat(M.d0)},
                        {"d1", mat(M.d1)}};
    if (M.weights)
        j["weights"] = {{"rows", M.weights->first}, {"cols", M.weights->second}};
    return j;
}

template <class K>
MatrixFactorization<K> mf_from_json(const nlohmann::json& j) {
    CtxPtr ctx = ctx_from_json(j.at("ring"));
    auto mat = [&](const nlohmann::json& rows) {
        PolyMat<K> m;
        for (const auto& row : rows) {
            std::vector<GCPoly<K>> r;
            for (const auto& p : row) r.push_back(poly_from_json<K>(p, ctx));
            m.push_back(std::move(r));
        }
        return m;
    };
    auto M = make_mf(ctx, poly_from_json<K>(j.at("w"), ctx), mat(j.at("d0")),
                     mat(j.at("d1")));
    if (j.contains("weights"))
        M.weights = {{j["weights"].at("rows").get<std::vector<long>>(),
                      j["weights"].at("cols").get<std::vector<long>>()}};
    return M;
}

}  // namespace curva
