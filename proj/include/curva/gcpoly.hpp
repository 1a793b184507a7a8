#pragma once

// GCPoly: elements of a free graded-commutative algebra over an exact
// coefficient field. Odd variables square to zero and anticommute; products
// carry the Koszul sign needed to bring monomials back to the fixed context
// order. Monomials optionally carry a power of the formal parameter t.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "curva/context.hpp"
#include "curva/rational.hpp"

namespace curva {

struct Mono {
    std::vector<std::int32_t> e;
    std::int32_t t = 0;

    auto operator<=>(const Mono&) const = default;

    // Total exponent over the ring variables (t not counted).
    int weight() const {
        int w = 0;
        for (auto x : e) w += x;
        return w;
    }
    bool is_one() const {
        if (t != 0) return false;
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }
};

namespace detail {

// Sign of v_m1 * v_m2 when the right factor's odd variables are commuted into
// place: one transposition for each pair (i in m1, j in m2) of odd indices
// with i > j. Returns 0 when an odd variable occurs in both factors.
inline int koszul_sign(const AlgebraCtx& C, const Mono& a, const Mono& b) {
    int inversions = 0;
    int a_odd_above = 0;  // number of odd variables of a with index > j
    for (int j = static_cast<int>(C.nvars()) - 1; j >= 0; --j) {
        if (C.vars[j].parity() == 1) {
            if (b.e[j] != 0) {
                if (a.e[j] != 0) return 0;  // odd square
                inversions += a_odd_above;
            }
            if (a.e[j] != 0) ++a_odd_above;
        }
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace detail

template <class K>
class GCPoly {
  public:
    GCPoly() = default;
    explicit GCPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {}

    static GCPoly zero(CtxPtr ctx) { return GCPoly(std::move(ctx)); }

    static GCPoly constant(CtxPtr ctx, K c) {
        GCPoly p(std::move(ctx));
        Mono m;
        m.e.assign(p.ctx_->nvars(), 0);
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    static GCPoly variable(CtxPtr ctx, int i) {
        GCPoly p(std::move(ctx));
        if (i < 0 || i >= static_cast<int>(p.ctx_->nvars()))
            throw std::invalid_argument("variable index out of range");
        Mono m;
        m.e.assign(p.ctx_->nvars(), 0);
        m.e[i] = 1;
        p.add_term(std::move(m), FieldOps<K>::one());
        return p;
    }

    static GCPoly variable(CtxPtr ctx, const std::string& name) {
        int i = ctx->index_of(name);
        if (i < 0) throw std::invalid_argument("unknown variable: " + name);
        return variable(std::move(ctx), i);
    }

    static GCPoly t_power(CtxPtr ctx, int k) {
        if (ctx->t_mode == TMode::none)
            throw std::invalid_argument("context has no t slot");
        GCPoly p(std::move(ctx));
        Mono m;
        m.e.assign(p.ctx_->nvars(), 0);
        m.t = k;
        p.add_term(std::move(m), FieldOps<K>::one());
        return p;
    }

    static GCPoly monomial(CtxPtr ctx, Mono m, K c) {
        GCPoly p(std::move(ctx));
        if (m.e.size() != p.ctx_->nvars())
            throw std::invalid_argument("monomial length does not match context");
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const CtxPtr& ctx() const { return ctx_; }
    const std::map<Mono, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // Normalizing insertion: applies the t policy and prunes zeros.
    void add_term(Mono m, K c) {
        if (FieldOps<K>::is_zero(c)) return;
        switch (ctx_->t_mode) {
            case TMode::none:
                if (m.t != 0)
                    throw std::domain_error("t-exponent in a context without t");
                break;
            case TMode::poly:
                if (m.t < 0)
                    throw std::invalid_argument("negative t-exponent in polynomial t-mode");
                break;
            case TMode::laurent:
                break;
            case TMode::trunc:
                if (m.t < 0)
                    throw std::invalid_argument("negative t-exponent in truncated t-mode");
                if (m.t > ctx_->t_trunc) return;  // discarded by the truncation policy
                break;
        }
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] < 0)
                throw std::domain_error("negative exponent on " + ctx_->vars[i].name);
            if (m.e[i] > 1 && ctx_->vars[i].parity() == 1) return;  // odd square
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second = it->second + c;
            if (FieldOps<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    GCPoly operator-() const {
        GCPoly r(ctx_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    GCPoly& operator+=(const GCPoly& o) {
        require_same_ctx(ctx_, o.ctx_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GCPoly& operator-=(const GCPoly& o) {
        require_same_ctx(ctx_, o.ctx_);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend GCPoly operator+(GCPoly a, const GCPoly& b) { return a += b; }
    friend GCPoly operator-(GCPoly a, const GCPoly& b) { return a -= b; }

    friend GCPoly operator*(const GCPoly& a, const GCPoly& b) {
        require_same_ctx(a.ctx_, b.ctx_);
        GCPoly r(a.ctx_);
        const AlgebraCtx& C = *a.ctx_;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                int s = detail::koszul_sign(C, ma, mb);
                if (s == 0) continue;
                Mono m;
                m.e.resize(C.nvars());
                for (size_t i = 0; i < C.nvars(); ++i) m.e[i] = ma.e[i] + mb.e[i];
                m.t = ma.t + mb.t;
                K c = ca * cb;
                if (s < 0) c = -c;
                r.add_term(std::move(m), std::move(c));
            }
        }
        return r;
    }

    GCPoly& operator*=(const GCPoly& o) { return *this = *this * o; }

    GCPoly scaled(const K& s) const {
        GCPoly r(ctx_);
        if (FieldOps<K>::is_zero(s)) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    GCPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power");
        GCPoly r = constant(ctx_, FieldOps<K>::one());
        GCPoly base(*this);
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    // Signed left partial derivative with respect to variable i. For an odd
    // variable the sign is (-1)^(number of odd factors standing before it).
    GCPoly derive_left(int i) const {
        if (i < 0 || i >= static_cast<int>(ctx_->nvars()))
            throw std::invalid_argument("unknown variable");
        const AlgebraCtx& C = *ctx_;
        GCPoly r(ctx_);
        for (const auto& [m, c] : terms_) {
            if (m.e[i] == 0) continue;
            Mono d = m;
            if (C.vars[i].parity() == 0) {
                d.e[i] -= 1;
                r.add_term(std::move(d), c * FieldOps<K>::from_long(m.e[i]));
            } else {
                int before = 0;
                for (int j = 0; j < i; ++j)
                    if (C.vars[j].parity() == 1 && m.e[j] != 0) ++before;
                d.e[i] = 0;
                K v = c;
                if (before % 2 == 1) v = -v;
                r.add_term(std::move(d), std::move(v));
            }
        }
        return r;
    }

    GCPoly derive_left(const std::string& name) const {
        int i = ctx_->index_of(name);
        if (i < 0) throw std::invalid_argument("unknown variable: " + name);
        return derive_left(i);
    }

    // Homomorphic substitution: images[i] replaces variable i, multiplied out
    // in context order. Each image must be parity-homogeneous with the parity
    // of the variable it replaces.
    GCPoly substitute(const CtxPtr& target, const std::vector<GCPoly>& images) const {
        if (images.size() != ctx_->nvars())
            throw std::invalid_argument("substitute needs one image per variable");
        for (size_t i = 0; i < images.size(); ++i) {
            require_same_ctx(target, images[i].ctx_);
            auto p = images[i].homogeneous_parity();
            if (!p && !images[i].is_zero())
                throw std::invalid_argument("image of " + ctx_->vars[i].name +
                                            " is not parity-homogeneous");
            if (p && *p != ctx_->vars[i].parity())
                throw std::invalid_argument("parity mismatch in image of " +
                                            ctx_->vars[i].name);
        }
        GCPoly out(target);
        for (const auto& [m, c] : terms_) {
            GCPoly acc = constant(target, c);
            if (m.t != 0) acc = acc * t_power(target, m.t);
            for (size_t i = 0; i < m.e.size(); ++i)
                if (m.e[i] != 0) acc = acc * images[i].pow(m.e[i]);
            out += acc;
        }
        return out;
    }

    // Named-image convenience; unmentioned variables map to the target
    // variable of the same name.
    // Transfers the polynomial into a compatible context, matching variables
    // by name. The target must cover every variable that actually occurs.
    GCPoly into(const CtxPtr& target) const {
        return substitute(target, std::vector<std::pair<std::string, GCPoly>>{});
    }

    GCPoly substitute(const CtxPtr& target,
                      const std::vector<std::pair<std::string, GCPoly>>& named) const {
        std::vector<GCPoly> images;
        images.reserve(ctx_->nvars());
        for (size_t i = 0; i < ctx_->nvars(); ++i) {
            const auto& v = ctx_->vars[i];
            const GCPoly* img = nullptr;
            for (const auto& [name, p] : named)
                if (name == v.name) img = &p;
            if (img) {
                images.push_back(*img);
            } else if (target->index_of(v.name) >= 0) {
                images.push_back(variable(target, v.name));
            } else {
                // a variable the target lacks is fine while it never occurs
                for (const auto& [m, c] : terms_) {
                    (void)c;
                    if (m.e[i] != 0)
                        throw std::invalid_argument("unknown variable: " + v.name);
                }
                images.push_back(GCPoly(target));
            }
        }
        for (const auto& [name, p] : named) {
            (void)p;
            if (ctx_->index_of(name) < 0)
                throw std::invalid_argument("substitute image for unknown variable: " + name);
        }
        return substitute(target, images);
    }

    int mono_parity(const Mono& m) const {
        const AlgebraCtx& C = *ctx_;
        long p = 0;
        for (size_t i = 0; i < C.nvars(); ++i) p += long(m.e[i]) * C.vars[i].parity();
        p += long(m.t) * (((C.t_degree % 2) + 2) % 2);
        return static_cast<int>(((p % 2) + 2) % 2);
    }

    long mono_degree(const Mono& m) const {
        const AlgebraCtx& C = *ctx_;
        long d = 0;
        for (size_t i = 0; i < C.nvars(); ++i) d += long(m.e[i]) * C.vars[i].degree;
        d += long(m.t) * C.t_degree;
        if (C.mod2) d = ((d % 2) + 2) % 2;
        return d;
    }

    // Degree when every term has the same one; nullopt otherwise or for 0.
    std::optional<long> homogeneous_degree() const {
        std::optional<long> d;
        for (const auto& [m, c] : terms_) {
            long md = mono_degree(m);
            if (!d)
                d = md;
            else if (*d != md)
                return std::nullopt;
        }
        return d;
    }

    std::optional<int> homogeneous_parity() const {
        std::optional<int> p;
        for (const auto& [m, c] : terms_) {
            int mp = mono_parity(m);
            if (!p)
                p = mp;
            else if (*p != mp)
                return std::nullopt;
        }
        return p;
    }

    bool t_free() const {
        for (const auto& [m, c] : terms_)
            if (m.t != 0) return false;
        return true;
    }

    // Drop all terms with t-exponent above the given order.
    GCPoly truncate_t(int order) const {
        GCPoly r(ctx_);
        for (const auto& [m, c] : terms_)
            if (m.t <= order) r.terms_.emplace(m, c);
        return r;
    }

    int max_weight() const {
        int w = 0;
        for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
        return w;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::vector<std::string> factors;
            for (size_t i = 0; i < m.e.size(); ++i) {
                if (m.e[i] == 0) continue;
                std::string f = ctx_->vars[i].name;
                if (m.e[i] != 1) f += "^" + std::to_string(m.e[i]);
                factors.push_back(std::move(f));
            }
            if (m.t != 0) {
                std::string f = "t";
                if (m.t != 1) f += "^" + std::to_string(m.t);
                factors.push_back(std::move(f));
            }
            if (factors.empty()) {
                os << mag;
            } else {
                if (mag != "1") os << mag << "*";
                for (size_t i = 0; i < factors.size(); ++i) {
                    if (i) os << "*";
                    os << factors[i];
                }
            }
        }
        return os.str();
    }

    bool operator==(const GCPoly& o) const {
        return same_ctx(ctx_, o.ctx_) && terms_ == o.terms_;
    }

  private:
    static std::string coeff_str(const Rat& c) { return c.get_str(); }
    static std::string coeff_str(const RatFunc& c) {
        if (c.den().degree() == 0 && c.num().degree() <= 0) return c.num().str();
        return "(" + c.str() + ")";
    }

    CtxPtr ctx_;
    std::map<Mono, K> terms_;
};

using QPoly = GCPoly<Rat>;      // rational coefficients, t in the monomial slot
using TPoly = GCPoly<RatFunc>;  // coefficients in Q(t)

}  // namespace curva
