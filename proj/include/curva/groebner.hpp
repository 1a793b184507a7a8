#pragma once

// Commutative Groebner-basis engine over an exact coefficient field (Q, or
// Q(t) with t living in the coefficients). Buchberger with the normal
// selection strategy and the coprimality criterion, canonical reduced monic
// bases, staircase dimension counts, saturation through the extra-variable
// trick, and the cleared-partial ideals cut out by critical points of a
// rational potential. Only even variables are admitted; odd directions are
// handled by the exterior layers before anything reaches this engine.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "curva/gcpoly.hpp"
#include "curva/json_io.hpp"

namespace curva {

enum class MonoOrder { grevlex, lex };

// Term order on exponent vectors. With elim_last = k > 0 the trailing k
// context variables form a heavier block that is compared first; a leading
// monomial free of the block then certifies the whole polynomial is, which
// is what elimination (and hence saturation) needs. The auxiliary variable
// is always appended at the end of the context, never spliced in front.
struct OrderSpec {
    MonoOrder base = MonoOrder::grevlex;
    std::size_t elim_last = 0;

    bool operator==(const OrderSpec&) const = default;
};

namespace detail {

// Compares a and b on the index range [lo, hi). Returns +1 when a is the
// larger monomial. Grevlex: higher total degree wins, ties go to the
// monomial whose last nonzero entry of a-b is negative.
inline int cmp_exp_range(MonoOrder ord, const Mono& a, const Mono& b,
                         std::size_t lo, std::size_t hi) {
    if (ord == MonoOrder::grevlex) {
        long da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            int d = a.e[i] - b.e[i];
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }
    for (std::size_t i = lo; i < hi; ++i) {
        int d = a.e[i] - b.e[i];
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace detail

inline int cmp_mono(const OrderSpec& ord, const Mono& a, const Mono& b) {
    std::size_t n = a.e.size();
    if (ord.elim_last > 0) {
        std::size_t lo = n - ord.elim_last;
        int c = detail::cmp_exp_range(ord.base, a, b, lo, n);
        if (c != 0) return c;
        return detail::cmp_exp_range(ord.base, a, b, 0, lo);
    }
    return detail::cmp_exp_range(ord.base, a, b, 0, n);
}

inline bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Mono mono_quot(const Mono& b, const Mono& a) {
    Mono q = b;
    for (std::size_t i = 0; i < q.e.size(); ++i) q.e[i] -= a.e[i];
    return q;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono l = a;
    for (std::size_t i = 0; i < l.e.size(); ++i) l.e[i] = std::max(a.e[i], b.e[i]);
    return l;
}

template <class K>
std::pair<Mono, K> leading_term(const OrderSpec& ord, const GCPoly<K>& f) {
    if (f.is_zero())
        throw std::invalid_argument("zero polynomial has no leading term");
    auto it = f.terms().begin();
    const Mono* m = &it->first;
    const K* c = &it->second;
    for (++it; it != f.terms().end(); ++it)
        if (cmp_mono(ord, it->first, *m) > 0) {
            m = &it->first;
            c = &it->second;
        }
    return {*m, *c};
}

template <class K>
struct Ideal {
    CtxPtr ctx;
    std::vector<GCPoly<K>> gens;
};

// Zero generators are dropped, so (0) is the empty list. The engine insists
// on a purely even context with t kept out of the monomials; t enters, if at
// all, through the coefficient field.
template <class K>
Ideal<K> make_ideal(CtxPtr ctx, std::vector<GCPoly<K>> gens) {
    if (!ctx->all_even())
        throw std::invalid_argument("Groebner engine accepts even variables only");
    if (ctx->t_mode != TMode::none)
        throw std::invalid_argument(
            "Groebner contexts carry t in the coefficient field, not as a monomial slot");
    std::vector<GCPoly<K>> kept;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!(*g.ctx() == *ctx))
            throw std::invalid_argument("generator from a different context");
        kept.push_back(std::move(g));
    }
    return {std::move(ctx), std::move(kept)};
}

template <class K>
Ideal<K> make_ideal(CtxPtr ctx, std::initializer_list<GCPoly<K>> gens) {
    return make_ideal(std::move(ctx), std::vector<GCPoly<K>>(gens));
}

// basis is auto-reduced and monic with pairwise non-divisible leading
// monomials, sorted by increasing leading monomial; it is the canonical
// reduced basis for (ideal, order), independent of generator presentation.
template <class K>
struct GroebnerBasis {
    CtxPtr ctx;
    OrderSpec order;
    std::vector<GCPoly<K>> basis;
};

namespace detail {

// Rescales f by a scalar so its coefficients are "primitive": integral with
// content one over Q, denominator-free and gcd-one over Q(t). Keeps the
// intermediate polynomials of a Buchberger run from accreting nested
// fractions. The sign is pinned by the map-order first term so the result
// does not depend on the monomial order in play.
inline void normalize_content(GCPoly<Rat>& f) {
    if (f.is_zero()) return;
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : f.terms()) {
        g = gcd(g, c.get_num());
        l = lcm(l, c.get_den());
    }
    Rat s(l, g);
    s.canonicalize();
    if (sgn(f.terms().begin()->second) < 0) s = -s;
    f = f.scaled(s);
}

inline void normalize_content(GCPoly<RatFunc>& f) {
    if (f.is_zero()) return;
    UPoly g, l(Rat(1));
    for (const auto& [m, c] : f.terms()) {
        g = upoly_gcd(g, c.num());
        l = (l * c.den()).exact_div(upoly_gcd(l, c.den()));
    }
    f = f.scaled(RatFunc(l, g));
    // upoly_gcd is monic, so a rational content can survive; sweep it too.
    mpz_class rg = 0, rl = 1;
    for (const auto& [m, c] : f.terms())
        for (const auto& a : c.num().coeffs()) {
            rg = gcd(rg, a.get_num());
            rl = lcm(rl, a.get_den());
        }
    Rat s(rl, rg);
    s.canonicalize();
    if (sgn(f.terms().begin()->second.num().lc()) < 0) s = -s;
    f = f.scaled(RatFunc(s));
}

}  // namespace detail

// Full normal form of f against the list gs: every term of the result is
// outside the leading-monomial ideal of gs. gs need not be a Groebner basis,
// in which case the remainder depends on it only up to membership questions.
template <class K>
GCPoly<K> reduce_full(const OrderSpec& ord, GCPoly<K> p,
                      const std::vector<GCPoly<K>>& gs) {
    std::vector<std::pair<Mono, K>> lts;
    lts.reserve(gs.size());
    for (const auto& g : gs) lts.push_back(leading_term(ord, g));
    GCPoly<K> r = GCPoly<K>::zero(p.ctx());
    while (!p.is_zero()) {
        auto [lm, lc] = leading_term(ord, p);
        bool hit = false;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            if (!mono_divides(lts[i].first, lm)) continue;
            K s = lc / lts[i].second;
            p -= GCPoly<K>::monomial(p.ctx(), mono_quot(lm, lts[i].first), s) * gs[i];
            hit = true;
            break;
        }
        if (!hit) {
            r += GCPoly<K>::monomial(p.ctx(), lm, lc);
            p -= GCPoly<K>::monomial(p.ctx(), lm, lc);
        }
    }
    return r;
}

template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, OrderSpec ord = {}) {
    std::vector<GCPoly<K>> G;
    for (const auto& g : I.gens) {
        auto h = g;
        detail::normalize_content(h);
        G.push_back(std::move(h));
    }

    struct SPair {
        std::size_t i, j;
        Mono lcm;
        int deg;
    };
    std::vector<SPair> pairs;
    auto push_pairs = [&](std::size_t j) {
        auto [lj, cj] = leading_term(ord, G[j]);
        (void)cj;
        for (std::size_t i = 0; i < j; ++i) {
            auto [li, ci] = leading_term(ord, G[i]);
            (void)ci;
            Mono l = mono_lcm(li, lj);
            pairs.push_back({i, j, l, l.weight()});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        // Normal strategy: minimal lcm degree first; remaining ties broken by
        // the order on the lcm, then by index, so the run is deterministic.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto& a = pairs[k];
            const auto& b = pairs[best];
            if (a.deg != b.deg) {
                if (a.deg < b.deg) best = k;
                continue;
            }
            int c = cmp_mono(ord, a.lcm, b.lcm);
            if (c != 0) {
                if (c < 0) best = k;
                continue;
            }
            if (std::tie(a.i, a.j) < std::tie(b.i, b.j)) best = k;
        }
        SPair pr = pairs[best];
        pairs.erase(pairs.begin() + best);

        auto [li, ci] = leading_term(ord, G[pr.i]);
        auto [lj, cj] = leading_term(ord, G[pr.j]);
        // Coprime leading monomials reduce to zero; skip the work.
        if (pr.lcm.weight() == li.weight() + lj.weight()) continue;

        GCPoly<K> s =
            GCPoly<K>::monomial(G[pr.i].ctx(), mono_quot(pr.lcm, li), cj) * G[pr.i] -
            GCPoly<K>::monomial(G[pr.j].ctx(), mono_quot(pr.lcm, lj), ci) * G[pr.j];
        GCPoly<K> h = reduce_full(ord, std::move(s), G);
        if (h.is_zero()) continue;
        detail::normalize_content(h);
        G.push_back(std::move(h));
        push_pairs(G.size() - 1);
    }

    // Minimalize: drop any element whose leading monomial another one divides.
    std::vector<GCPoly<K>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        auto [li, ci] = leading_term(ord, G[i]);
        (void)ci;
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            auto [lj, cj] = leading_term(ord, G[j]);
            (void)cj;
            if (!mono_divides(lj, li)) continue;
            // Equal leading monomials: keep the earlier element.
            redundant = (lj != li) || (j < i);
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // Tail-reduce each survivor against the rest, then scale monic. Leading
    // monomials are pairwise non-divisible here, so one pass lands on the
    // unique reduced basis.
    std::vector<GCPoly<K>> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<GCPoly<K>> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        if (!others.empty()) reduced[i] = reduce_full(ord, reduced[i], others);
        auto [lm, lc] = leading_term(ord, reduced[i]);
        (void)lm;
        reduced[i] = reduced[i].scaled(FieldOps<K>::inv(lc));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const GCPoly<K>& a, const GCPoly<K>& b) {
                  return cmp_mono(ord, leading_term(ord, a).first,
                                  leading_term(ord, b).first) < 0;
              });
    return {I.ctx, ord, std::move(reduced)};
}

template <class K>
GCPoly<K> normal_form(const GroebnerBasis<K>& G, const GCPoly<K>& f) {
    if (G.basis.empty()) return f;
    return reduce_full(G.order, f, G.basis);
}

// The staircase of a reduced basis: standard monomials of the quotient when
// it is finite-dimensional, or the witness variables lacking a pure-power
// leading monomial when it is not.
struct QuotientInfo {
    bool finite = false;
    std::size_t dimension = 0;
    std::vector<Mono> staircase;
    std::vector<std::string> no_pure_power;
};

// Staircase of a set of leading monomials: the standard monomials outside
// the monomial ideal they generate. Shared between the ring quotients here
// and the per-position module quotients.
inline QuotientInfo staircase_of_lms(const CtxPtr& ctx, const OrderSpec& ord,
                                     const std::vector<Mono>& lms) {
    QuotientInfo out;
    std::size_t n = ctx->nvars();
    for (const auto& lm : lms)
        if (lm.is_one()) {  // the unit ideal
            out.finite = true;
            return out;
        }
    // Finite iff every variable shows up as a pure power among the leading
    // monomials; the minimal such powers box in the staircase.
    std::vector<int> bound(n, -1);
    for (const auto& lm : lms) {
        int var = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n && pure; ++i) {
            if (lm.e[i] == 0) continue;
            if (var >= 0)
                pure = false;
            else
                var = static_cast<int>(i);
        }
        if (pure && var >= 0)
            bound[var] = bound[var] < 0 ? lm.e[var]
                                        : std::min(bound[var], lm.e[var]);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0) out.no_pure_power.push_back(ctx->vars[i].name);
    if (!out.no_pure_power.empty()) return out;

    Mono cur;
    cur.e.assign(n, 0);
    std::vector<Mono> cells;
    // Walk the box under the pure-power bounds, odometer style.
    for (;;) {
        bool in_ideal = false;
        for (const auto& lm : lms)
            if (mono_divides(lm, cur)) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) cells.push_back(cur);
        std::size_t i = 0;
        while (i < n && cur.e[i] + 1 >= bound[i]) cur.e[i++] = 0;
        if (i == n) break;
        ++cur.e[i];
    }
    std::sort(cells.begin(), cells.end(), [&](const Mono& a, const Mono& b) {
        return cmp_mono(ord, a, b) < 0;
    });
    out.finite = true;
    out.dimension = cells.size();
    out.staircase = std::move(cells);
    return out;
}

template <class K>
QuotientInfo quotient_dimension(const GroebnerBasis<K>& G) {
    std::vector<Mono> lms;
    for (const auto& g : G.basis) lms.push_back(leading_term(G.order, g).first);
    return staircase_of_lms(G.ctx, G.order, lms);
}

// I : f^infinity through the auxiliary-variable presentation (I, 1 - y f)
// with y eliminated. The result lives back in the original context.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const GCPoly<K>& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot saturate by zero");
    std::string yname = "y_sat";
    while (I.ctx->index_of(yname) >= 0) yname += "_";
    auto vars = I.ctx->vars;
    vars.push_back({yname, 0});
    CtxPtr big = make_ctx(std::move(vars));

    std::vector<GCPoly<K>> up;
    for (const auto& g : I.gens) up.push_back(g.into(big));
    up.push_back(GCPoly<K>::constant(big, FieldOps<K>::one()) -
                 GCPoly<K>::variable(big, yname) * f.into(big));

    auto G = buchberger(make_ideal(big, std::move(up)),
                        OrderSpec{MonoOrder::grevlex, 1});
    std::size_t yi = big->nvars() - 1;
    std::vector<GCPoly<K>> down;
    for (const auto& g : G.basis) {
        // Under the elimination order a y-free leading monomial forces the
        // whole element to be y-free.
        if (leading_term(G.order, g).first.e[yi] != 0) continue;
        down.push_back(g.substitute(I.ctx, {{yname, GCPoly<K>::zero(I.ctx)}}));
    }
    return make_ideal(I.ctx, std::move(down));
}

// Total length of the subscheme left after saturating away each excluded
// divisor: the vector-space dimension of the saturated quotient.
template <class K>
QuotientInfo scheme_length(const Ideal<K>& I,
                           const std::vector<GCPoly<K>>& excluded = {}) {
    Ideal<K> J = I;
    for (const auto& f : excluded) J = saturate(J, f);
    return quotient_dimension(buchberger(J));
}

// Critical equations of the rational potential W = num / den^k with the
// denominators cleared: one generator d_i(num) den - k num d_i(den) per
// variable. Callers saturate by den afterwards to discard the spurious
// solutions the clearing introduces along den = 0.
template <class K>
Ideal<K> critical_ideal(const GCPoly<K>& num, const GCPoly<K>& den, long k) {
    if (den.is_zero())
        throw std::invalid_argument("critical_ideal needs a nonzero denominator");
    const CtxPtr& ctx = num.ctx();
    std::vector<GCPoly<K>> gens;
    for (std::size_t i = 0; i < ctx->nvars(); ++i)
        gens.push_back(num.derive_left(static_cast<int>(i)) * den -
                       num.scaled(FieldOps<K>::from_long(k)) *
                           den.derive_left(static_cast<int>(i)));
    return make_ideal(ctx, std::move(gens));
}

inline GCPoly<Rat> specialize_t(const GCPoly<RatFunc>& f, const Rat& t0) {
    GCPoly<Rat> out(f.ctx());
    for (const auto& [m, c] : f.terms()) {
        auto v = c.eval(t0);
        if (!v)
            throw std::invalid_argument("specialization at t = " + to_string(t0) +
                                        " hits a coefficient pole");
        out.add_term(m, *v);
    }
    return out;
}

inline Ideal<Rat> specialize_t(const Ideal<RatFunc>& I, const Rat& t0) {
    std::vector<GCPoly<Rat>> gens;
    for (const auto& g : I.gens) gens.push_back(specialize_t(g, t0));
    return make_ideal(I.ctx, std::move(gens));
}

// Randomized fast path for length counts over Q(t): run at two specialized
// values of t and insist the counts agree. Sound for all but finitely many
// t, hence flagged probabilistic in every report that consumes it.
struct SpecializedLength {
    QuotientInfo info;
    bool probabilistic = true;
    std::vector<Rat> draws;
};

inline SpecializedLength scheme_length_specialized(
    const Ideal<RatFunc>& I, const std::vector<GCPoly<RatFunc>>& excluded = {},
    std::vector<Rat> draws = {Rat(5) / 7, Rat(-3) / 11}) {
    if (draws.size() < 2)
        throw std::invalid_argument("need at least two specialization draws");
    SpecializedLength out;
    out.draws = draws;
    for (std::size_t k = 0; k < draws.size(); ++k) {
        std::vector<GCPoly<Rat>> exc;
        for (const auto& f : excluded) exc.push_back(specialize_t(f, draws[k]));
        QuotientInfo got = scheme_length(specialize_t(I, draws[k]), exc);
        if (k == 0) {
            out.info = std::move(got);
            continue;
        }
        if (got.finite != out.info.finite || got.dimension != out.info.dimension)
            throw std::runtime_error(
                "specialized length counts disagree across draws; rerun exactly over Q(t)");
    }
    return out;
}

inline std::string order_name(MonoOrder o) {
    return o == MonoOrder::grevlex ? "grevlex" : "lex";
}

inline MonoOrder order_from_name(const std::string& s) {
    if (s == "grevlex") return MonoOrder::grevlex;
    if (s == "lex") return MonoOrder::lex;
    throw std::invalid_argument("unknown monomial order: " + s);
}

template <class K>
nlohmann::json ideal_to_json(const Ideal<K>& I) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : I.gens) gens.push_back(poly_to_json(g));
    return {{"ctx", ctx_to_json(*I.ctx)}, {"generators", gens}};
}

template <class K>
Ideal<K> ideal_from_json(const nlohmann::json& j) {
    CtxPtr ctx = ctx_from_json(j.at("ctx"));
    std::vector<GCPoly<K>> gens;
    for (const auto& jg : j.at("generators"))
        gens.push_back(poly_from_json<K>(jg, ctx));
    return make_ideal(std::move(ctx), std::move(gens));
}

template <class K>
nlohmann::json groebner_to_json(const GroebnerBasis<K>& G) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& g : G.basis) basis.push_back(poly_to_json(g));
    nlohmann::json j = {{"order", order_name(G.order.base)}, {"basis", basis}};
    if (G.order.elim_last > 0) j["elim_last"] = G.order.elim_last;
    return j;
}

}  // namespace curva
