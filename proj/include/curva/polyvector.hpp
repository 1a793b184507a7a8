#pragma once

// Polyvector fields on a free graded-commutative algebra: the odd Poisson
// bracket pairing each variable with its dual, twisted differentials,
// Maurer-Cartan residuals, gauge transformations, windowed cohomology and
// the one-form connection matrix.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curva/gcpoly.hpp"
#include "curva/json_io.hpp"
#include "curva/linalg.hpp"

namespace curva {

// Base variables followed by their duals inside one algebra context. The
// dual of base variable i sits at index nbase + i.
struct PolyCtx {
    CtxPtr full;
    size_t nbase = 0;

    size_t ndual() const { return full->nvars() - nbase; }
    int dual_of(size_t i) const { return static_cast<int>(nbase + i); }
    bool is_dual(size_t idx) const { return idx >= nbase; }

    // number of dual factors in a monomial, counted with exponents
    long dual_weight(const Mono& m) const {
        long w = 0;
        for (size_t j = nbase; j < m.e.size(); ++j) w += m.e[j];
        return w;
    }
};

// Duals get degree shift - degree(base); the default shift of -1 makes the
// bracket degree +1. Empty dual_names produces "d<name>".
inline PolyCtx make_poly_ctx(std::vector<VariableSpec> base,
                             std::vector<std::string> dual_names = {},
                             int t_degree = 0, TMode t_mode = TMode::none,
                             int t_trunc = 0, bool mod2 = false, int shift = -1) {
    if (!dual_names.empty() && dual_names.size() != base.size())
        throw std::invalid_argument("need one dual name per base variable");
    std::vector<VariableSpec> all = base;
    for (size_t i = 0; i < base.size(); ++i) {
        std::string nm = dual_names.empty() ? "d" + base[i].name : dual_names[i];
        all.push_back({std::move(nm), shift - base[i].degree});
    }
    PolyCtx pc;
    pc.full = make_ctx(std::move(all), t_degree, t_mode, t_trunc, mod2);
    pc.nbase = base.size();
    return pc;
}

namespace detail {

template <class K>
GCPoly<K> term_poly(const CtxPtr& ctx, const Mono& m, const K& c) {
    GCPoly<K> p(ctx);
    p.add_term(m, c);
    return p;
}

}  // namespace detail

// Odd Poisson bracket. In right/left derivative form it reads
//   {F,G} = sum_i (dr F/dth_i)(dl G/dz_i) - (dr F/dz_i)(dl G/dth_i);
// rewriting the right derivatives as left ones puts a Koszul factor
// (-1)^{|v|(|F|+1)} on each slot. Only this placement of signs passes the
// graded Jacobi identity (and hence gives a square-zero twisted
// differential); see the antisymmetry/Jacobi property suite.
template <class K>
GCPoly<K> schouten(const PolyCtx& pc, const GCPoly<K>& F, const GCPoly<K>& G) {
    require_same_ctx(pc.full, F.ctx());
    require_same_ctx(pc.full, G.ctx());
    GCPoly<K> out(F.ctx());
    for (const auto& [mF, cF] : F.terms()) {
        int pF = F.mono_parity(mF);
        auto Ft = detail::term_poly(F.ctx(), mF, cF);
        for (size_t i = 0; i < pc.nbase; ++i) {
            int z = static_cast<int>(i), th = pc.dual_of(i);
            int pz = pc.full->vars[z].parity();
            int pth = pc.full->vars[th].parity();
            bool s1 = (pth * (pF + 1)) % 2 != 0;  // true means negate
            bool s2 = (pz * (pF + 1)) % 2 != 0;
            auto a = Ft.derive_left(th) * G.derive_left(z);
            auto b = Ft.derive_left(z) * G.derive_left(th);
            if (s1)
                out -= a;
            else
                out += a;
            if (s2)
                out += b;
            else
                out -= b;
        }
    }
    return out;
}

template <class K>
bool is_flat(const PolyCtx& pc, const GCPoly<K>& bg) {
    return schouten(pc, bg, bg).is_zero();
}

// D = {background, -}; a flat background makes this square to zero.
template <class K>
GCPoly<K> twisted_diff(const PolyCtx& pc, const GCPoly<K>& bg, const GCPoly<K>& F) {
    if (!is_flat(pc, bg))
        throw std::invalid_argument("background does not square to zero");
    return schouten(pc, bg, F);
}

template <class K>
struct MCProblem {
    PolyCtx pc;
    GCPoly<K> background;
    GCPoly<K> candidate;
    int truncation = 0;
};

template <class K>
MCProblem<K> make_mc_problem(const PolyCtx& pc, GCPoly<K> background, GCPoly<K> candidate,
                             int truncation) {
    if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
    if (!is_flat(pc, background))
        throw std::invalid_argument("background does not square to zero");
    return {pc, std::move(background), std::move(candidate), truncation};
}

// {B, mu} + 1/2 {mu, mu}, truncated in the t slot; zero iff mu solves the
// Maurer-Cartan equation to that order.
template <class K>
GCPoly<K> mc_residual(const MCProblem<K>& prob) {
    K half = FieldOps<K>::inv(FieldOps<K>::from_long(2));
    auto res = schouten(prob.pc, prob.background, prob.candidate) +
               schouten(prob.pc, prob.candidate, prob.candidate).scaled(half);
    return prob.pc.full->t_mode == TMode::none ? res : res.truncate_t(prob.truncation);
}

// e^{phi} acting on mu over the given background:
//   mu + sum_{n>=0} ad(phi)^n( {phi,mu} - {phi,background} ) / (n+1)!
// truncated in t at `order`. The series must die out within the budget.
template <class K>
GCPoly<K> gauge(const PolyCtx& pc, const GCPoly<K>& phi, const GCPoly<K>& mu,
                const GCPoly<K>& bg, int order) {
    auto trunc = [&](GCPoly<K> p) {
        return pc.full->t_mode == TMode::none ? p : p.truncate_t(order);
    };
    GCPoly<K> acc = trunc(mu);
    GCPoly<K> term = trunc(schouten(pc, phi, mu) - schouten(pc, phi, bg));
    K fact = FieldOps<K>::one();
    for (int n = 0; !term.is_zero(); ++n) {
        if (n > 64)
            throw std::runtime_error("gauge series did not terminate within the bracket budget");
        // fact = 1/(n+1)!
        fact = fact * FieldOps<K>::inv(FieldOps<K>::from_long(n + 1));
        acc += term.scaled(fact);
        term = trunc(schouten(pc, phi, term));
    }
    return acc;
}

// All monomials of total variable weight <= bound (odd exponents capped at
// one, t slot capped by the truncation window when active).
inline std::vector<Mono> enumerate_monomials(const CtxPtr& ctx, int weight_bound) {
    if (ctx->t_mode == TMode::laurent)
        throw std::invalid_argument("monomial enumeration needs a bounded t slot");
    int tmax = ctx->t_mode == TMode::trunc ? ctx->t_trunc : 0;
    std::vector<Mono> out;
    Mono m;
    m.e.assign(ctx->nvars(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == ctx->nvars()) {
            for (int te = 0; te <= tmax; ++te) {
                m.t = te;
                out.push_back(m);
            }
            m.t = 0;
            return;
        }
        int cap = ctx->vars[i].parity() == 1 ? std::min(left, 1) : left;
        for (int e = 0; e <= cap; ++e) {
            m.e[i] = e;
            rec(i + 1, left - e);
        }
        m.e[i] = 0;
    };
    rec(0, weight_bound);
    return out;
}

template <class K>
struct CohomologyBlock {
    long degree = 0;
    int weight = 0;  // exact weight (graded path) or the cumulative bound
    long dimension = 0;
    bool stable = true;
    std::vector<GCPoly<K>> basis;  // cocycle representatives, independent mod boundaries
};

namespace detail {

// index map for a list of monomials
struct MonoIndex {
    std::map<Mono, int> pos;
    int add(const Mono& m) {
        auto it = pos.find(m);
        if (it != pos.end()) return it->second;
        int k = static_cast<int>(pos.size());
        pos.emplace(m, k);
        return k;
    }
    int find(const Mono& m) const {
        auto it = pos.find(m);
        return it == pos.end() ? -1 : it->second;
    }
    size_t size() const { return pos.size(); }
};

// One degree slice of the windowed complex. `dom` spans the slice, `pre` the
// slice one differential step earlier. Rows of the image that leave the
// window (in_window false) are what make the filtered count a lower bound.
template <class K>
struct SliceData {
    std::vector<Mono> dom, pre;
    Mat<K> d_dom;                      // D on dom, all image rows
    Mat<K> d_pre_full, d_pre_out;      // D on pre: all rows / out-of-window rows
    Mat<K> d_pre_in;                   // D on pre: rows inside the window slice
};

}  // namespace detail

// Kernel-mod-image dimensions of D = {background, -} on the span of
// monomials of weight <= weight_bound, one block per degree in
// [deg_lo, deg_hi]. A weight- and degree-homogeneous background splits the
// computation into exact per-weight blocks (always stable); otherwise each
// degree is computed cumulatively at the bound and at bound+1, and the block
// is marked stable when the two agree.
template <class K>
std::vector<CohomologyBlock<K>> cohomology_window(const PolyCtx& pc, const GCPoly<K>& bg,
                                                  long deg_lo, long deg_hi,
                                                  int weight_bound) {
    if (deg_lo > deg_hi) throw std::invalid_argument("inverted degree window");
    if (weight_bound < 0) throw std::invalid_argument("negative weight bound");
    const CtxPtr& ctx = pc.full;
    if (!is_flat(pc, bg))
        throw std::invalid_argument("background does not square to zero");
    if (!bg.is_zero() && !bg.homogeneous_parity())
        throw std::invalid_argument("background must be parity-homogeneous");

    auto degree_of = [&](const Mono& m) { return bg.mono_degree(m); };
    auto weight_of = [&](const Mono& m) { return static_cast<int>(m.weight()); };

    // differential of a single monomial
    auto dmono = [&](const Mono& m) {
        GCPoly<K> one = detail::term_poly(ctx, m, FieldOps<K>::one());
        return schouten(pc, bg, one);
    };

    bool graded = true;  // weight- and degree-homogeneous background
    std::optional<long> bgw;
    if (bg.is_zero()) {
        // zero differential: every slice is its own cohomology
    } else {
        if (!bg.homogeneous_degree()) graded = false;
        for (const auto& [m, c] : bg.terms()) {
            (void)c;
            if (!bgw)
                bgw = m.weight();
            else if (*bgw != m.weight())
                graded = false;
        }
    }
    long wshift = bgw ? *bgw - 2 : 0;

    // degree step of D, probed on the enumerated monomials
    auto monos_probe = enumerate_monomials(ctx, weight_bound + 1);
    std::optional<long> dshift;
    for (const auto& m : monos_probe) {
        auto im = dmono(m);
        if (im.is_zero()) continue;
        dshift = degree_of(im.terms().begin()->first) - degree_of(m);
        break;
    }

    auto collect = [&](long deg, int wlo, int whi, const std::vector<Mono>& all) {
        std::vector<Mono> out;
        for (const auto& m : all) {
            long d = degree_of(m);
            if (ctx->mod2) d = ((d % 2) + 2) % 2;
            long want = ctx->mod2 ? ((deg % 2) + 2) % 2 : deg;
            if (d == want && weight_of(m) >= wlo && weight_of(m) <= whi) out.push_back(m);
        }
        return out;
    };

    // cocycle representatives independent modulo the boundary space
    auto pick_basis = [&](const std::vector<Mono>& dom, const Mat<K>& d_dom,
                          const std::vector<std::vector<K>>& boundaries) {
        std::vector<std::vector<K>> kervecs = nullspace(d_dom);
        size_t n = dom.size();
        Mat<K> probe(n, boundaries.size() + kervecs.size());
        for (size_t j = 0; j < boundaries.size(); ++j)
            for (size_t i = 0; i < n; ++i) probe.at(i, j) = boundaries[j][i];
        for (size_t j = 0; j < kervecs.size(); ++j)
            for (size_t i = 0; i < n; ++i) probe.at(i, boundaries.size() + j) = kervecs[j][i];
        std::vector<size_t> pivots;
        rref(probe, &pivots);
        std::vector<GCPoly<K>> basis;
        for (size_t p : pivots) {
            if (p < boundaries.size()) continue;
            const auto& v = kervecs[p - boundaries.size()];
            GCPoly<K> rep(ctx);
            for (size_t i = 0; i < n; ++i)
                if (!FieldOps<K>::is_zero(v[i])) rep.add_term(dom[i], v[i]);
            basis.push_back(std::move(rep));
        }
        return basis;
    };

    // build the slice matrices for (degree, weight range) with the given cap
    auto slice = [&](long deg, int wlo, int whi, const std::vector<Mono>& all,
                     int cap) -> detail::SliceData<K> {
        detail::SliceData<K> S;
        S.dom = collect(deg, wlo, whi, all);
        long pre_deg = deg - (dshift ? *dshift : 0);
        int pre_lo = graded ? static_cast<int>(wlo - wshift) : 0;
        int pre_hi = graded ? static_cast<int>(whi - wshift) : cap;
        if (pre_hi >= 0) S.pre = collect(pre_deg, std::max(pre_lo, 0), pre_hi, all);

        detail::MonoIndex dom_idx;
        for (const auto& m : S.dom) dom_idx.add(m);

        // D on dom over every monomial hit
        detail::MonoIndex rows;
        std::vector<std::map<int, K>> cols(S.dom.size());
        for (size_t j = 0; j < S.dom.size(); ++j) {
            auto im = dmono(S.dom[j]);
            for (const auto& [mm, cc] : im.terms()) cols[j][rows.add(mm)] = cc;
        }
        S.d_dom = Mat<K>(rows.size(), S.dom.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (const auto& [i, v] : cols[j]) S.d_dom.at(i, j) = v;

        // D on pre, rows split by membership in the dom slice
        detail::MonoIndex prow;
        std::vector<std::map<int, K>> pcols(S.pre.size());
        for (size_t j = 0; j < S.pre.size(); ++j) {
            auto im = dmono(S.pre[j]);
            for (const auto& [mm, cc] : im.terms()) pcols[j][prow.add(mm)] = cc;
        }
        std::vector<int> row_in(prow.size(), -1);
        for (const auto& [mm, i] : prow.pos) row_in[i] = dom_idx.find(mm);
        size_t nout = 0;
        for (int r : row_in)
            if (r < 0) ++nout;
        S.d_pre_full = Mat<K>(prow.size(), S.pre.size());
        S.d_pre_out = Mat<K>(nout, S.pre.size());
        S.d_pre_in = Mat<K>(S.dom.size(), S.pre.size());
        std::vector<int> out_row(prow.size(), -1);
        size_t next_out = 0;
        for (size_t i = 0; i < row_in.size(); ++i)
            if (row_in[i] < 0) out_row[i] = static_cast<int>(next_out++);
        for (size_t j = 0; j < pcols.size(); ++j)
            for (const auto& [i, v] : pcols[j]) {
                S.d_pre_full.at(i, j) = v;
                if (row_in[i] >= 0)
                    S.d_pre_in.at(row_in[i], j) = v;
                else
                    S.d_pre_out.at(out_row[i], j) = v;
            }
        return S;
    };

    auto slice_dims = [&](const detail::SliceData<K>& S, long* kerdim, long* imdim) {
        Mat<K> a = S.d_dom;
        *kerdim = static_cast<long>(S.dom.size()) - rank(a);
        Mat<K> f = S.d_pre_full, o = S.d_pre_out;
        long null_full = static_cast<long>(S.pre.size()) - rank(f);
        long null_out = static_cast<long>(S.pre.size()) - rank(o);
        *imdim = null_out - null_full;
    };

    std::vector<CohomologyBlock<K>> blocks;
    auto monos = enumerate_monomials(ctx, weight_bound);

    for (long deg = deg_lo; deg <= deg_hi; ++deg) {
        if (graded) {
            for (int w = 0; w <= weight_bound; ++w) {
                auto S = slice(deg, w, w, monos, weight_bound);
                if (S.dom.empty()) continue;
                long kerdim = 0, imdim = 0;
                slice_dims(S, &kerdim, &imdim);
                CohomologyBlock<K> blk;
                blk.degree = deg;
                blk.weight = w;
                blk.dimension = kerdim - imdim;
                blk.stable = true;
                std::vector<std::vector<K>> bnd;
                if (blk.dimension > 0) {
                    // boundaries inside the slice: image of the pre columns
                    for (auto& v : nullspace(S.d_pre_out)) {
                        std::vector<K> img(S.dom.size(), FieldOps<K>::zero());
                        for (size_t i = 0; i < S.dom.size(); ++i)
                            for (size_t j = 0; j < S.pre.size(); ++j)
                                img[i] = img[i] + S.d_pre_in.at(i, j) * v[j];
                        bnd.push_back(std::move(img));
                    }
                    blk.basis = pick_basis(S.dom, S.d_dom, bnd);
                }
                blocks.push_back(std::move(blk));
            }
        } else {
            auto S = slice(deg, 0, weight_bound, monos, weight_bound);
            long kerdim = 0, imdim = 0;
            slice_dims(S, &kerdim, &imdim);

            auto monos1 = enumerate_monomials(ctx, weight_bound + 1);
            auto S1 = slice(deg, 0, weight_bound + 1, monos1, weight_bound + 1);
            long ker1 = 0, im1 = 0;
            slice_dims(S1, &ker1, &im1);

            CohomologyBlock<K> blk;
            blk.degree = deg;
            blk.weight = weight_bound;
            blk.dimension = kerdim - imdim;
            blk.stable = (kerdim - imdim) == (ker1 - im1);
            std::vector<std::vector<K>> bnd;
            for (auto& v : nullspace(S.d_pre_out)) {
                std::vector<K> img(S.dom.size(), FieldOps<K>::zero());
                for (size_t i = 0; i < S.dom.size(); ++i)
                    for (size_t j = 0; j < S.pre.size(); ++j)
                        img[i] = img[i] + S.d_pre_in.at(i, j) * v[j];
                bnd.push_back(std::move(img));
            }
            blk.basis = pick_basis(S.dom, S.d_dom, bnd);
            blocks.push_back(std::move(blk));
        }
    }
    return blocks;
}

// Solve D(P) = cocycle on the span of monomials of weight <= bound.
template <class K>
std::optional<GCPoly<K>> is_coboundary(const PolyCtx& pc, const GCPoly<K>& bg,
                                       const GCPoly<K>& cocycle, int weight_bound) {
    const CtxPtr& ctx = pc.full;
    require_same_ctx(ctx, cocycle.ctx());
    if (!schouten(pc, bg, cocycle).is_zero())
        throw std::invalid_argument("cocycle is not closed");
    if (cocycle.is_zero()) return GCPoly<K>(ctx);

    auto dom = enumerate_monomials(ctx, weight_bound);
    detail::MonoIndex rows;
    for (const auto& [m, c] : cocycle.terms()) {
        (void)c;
        rows.add(m);
    }
    std::vector<std::map<int, K>> cols(dom.size());
    for (size_t j = 0; j < dom.size(); ++j) {
        GCPoly<K> one = detail::term_poly(ctx, dom[j], FieldOps<K>::one());
        auto im = schouten(pc, bg, one);
        for (const auto& [mm, cc] : im.terms()) cols[j][rows.add(mm)] = cc;
    }
    Mat<K> M(rows.size(), dom.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, v] : cols[j]) M.at(i, j) = v;
    std::vector<K> rhs(rows.size(), FieldOps<K>::zero());
    for (const auto& [m, c] : cocycle.terms()) rhs[rows.find(m)] = c;

    auto sol = solve(M, rhs);
    if (!sol) return std::nullopt;
    GCPoly<K> P(ctx);
    for (size_t j = 0; j < dom.size(); ++j)
        if (!FieldOps<K>::is_zero((*sol)[j])) P.add_term(dom[j], (*sol)[j]);
    return P;
}

// Connection-matrix data for a vector field v = sum_j v_j d/dz_j. Entries
// live in the base algebra extended by odd one-form generators du_<name>;
// Gamma[j][i] = sum_k d_i d_k v_j du_k.
template <class K>
struct GammaReport {
    CtxPtr form_ctx;  // base variables plus the du generators
    std::vector<std::vector<GCPoly<K>>> gamma;
    int nilpotency_order = -1;  // smallest n with Gamma^n = 0, -1 if none found
    std::vector<GCPoly<K>> traces;
    bool traces_all_zero = true;
};

template <class K>
GammaReport<K> gamma_check(const PolyCtx& pc, const GCPoly<K>& v) {
    const CtxPtr& ctx = pc.full;
    require_same_ctx(ctx, v.ctx());
    const size_t n = pc.nbase;
    for (const auto& [m, c] : v.terms()) {
        (void)c;
        if (pc.dual_weight(m) != 1)
            throw std::invalid_argument("input is not a vector field (dual degree must be one)");
    }

    // base variables plus du generators, all du odd via degree deg(z) - 1
    std::vector<VariableSpec> ext;
    for (size_t i = 0; i < n; ++i) ext.push_back(ctx->vars[i]);
    for (size_t i = 0; i < n; ++i)
        ext.push_back({"du_" + ctx->vars[i].name, ctx->vars[i].degree - 1});
    CtxPtr fctx = make_ctx(std::move(ext), ctx->t_degree, ctx->t_mode, ctx->t_trunc, ctx->mod2);

    // component v_j, moved into the form context
    std::vector<GCPoly<K>> images;
    for (size_t i = 0; i < ctx->nvars(); ++i)
        images.push_back(i < n ? GCPoly<K>::variable(fctx, ctx->vars[i].name)
                               : GCPoly<K>(fctx));
    std::vector<GCPoly<K>> comp;
    for (size_t j = 0; j < n; ++j)
        comp.push_back(v.derive_left(pc.dual_of(j)).substitute(fctx, images));

    GammaReport<K> rep;
    rep.form_ctx = fctx;
    rep.gamma.assign(n, std::vector<GCPoly<K>>(n, GCPoly<K>(fctx)));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            GCPoly<K> entry(fctx);
            for (size_t k = 0; k < n; ++k) {
                auto second = comp[j].derive_left(static_cast<int>(i))
                                  .derive_left(static_cast<int>(k));
                entry += second * GCPoly<K>::variable(fctx, "du_" + ctx->vars[k].name);
            }
            rep.gamma[j][i] = std::move(entry);
        }

    auto matmul = [&](const std::vector<std::vector<GCPoly<K>>>& A,
                      const std::vector<std::vector<GCPoly<K>>>& B) {
        std::vector<std::vector<GCPoly<K>>> C(n, std::vector<GCPoly<K>>(n, GCPoly<K>(fctx)));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
        return C;
    };
    auto is_zero_mat = [&](const std::vector<std::vector<GCPoly<K>>>& A) {
        for (const auto& row : A)
            for (const auto& p : row)
                if (!p.is_zero()) return false;
        return true;
    };

    auto power = rep.gamma;
    for (size_t step = 1; step <= n; ++step) {
        GCPoly<K> tr(fctx);
        for (size_t i = 0; i < n; ++i) tr += power[i][i];
        rep.traces.push_back(tr);
        if (!tr.is_zero()) rep.traces_all_zero = false;
        if (rep.nilpotency_order < 0 && is_zero_mat(power))
            rep.nilpotency_order = static_cast<int>(step);
        if (step < n) power = matmul(power, rep.gamma);
    }
    if (rep.nilpotency_order < 0 && is_zero_mat(matmul(power, rep.gamma)))
        rep.nilpotency_order = static_cast<int>(n + 1);
    return rep;
}

// ---- serialization ---------------------------------------------------------

template <class K>
Json polyvector_to_json(const PolyCtx& pc, const GCPoly<K>& p) {
    Json j = poly_to_json(p);
    j["n_base"] = pc.nbase;
    return j;
}

template <class K>
std::pair<PolyCtx, GCPoly<K>> polyvector_from_json(const Json& j) {
    PolyCtx pc;
    pc.full = ctx_from_json(j);
    pc.nbase = j.at("n_base").get<size_t>();
    if (pc.nbase * 2 != pc.full->nvars())
        throw std::invalid_argument("n_base inconsistent with variable count");
    return {pc, poly_from_json<K>(j, pc.full)};
}

template <class K>
Json window_report_to_json(const std::vector<CohomologyBlock<K>>& blocks) {
    Json arr = Json::array();
    for (const auto& b : blocks) {
        Json basis = Json::array();
        for (const auto& p : b.basis) basis.push_back(p.str());
        arr.push_back({{"degree", b.degree},
                       {"weight_bound", b.weight},
                       {"dimension", b.dimension},
                       {"stable", b.stable},
                       {"basis", basis}});
    }
    return arr;
}

}  // namespace curva
