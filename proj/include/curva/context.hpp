#pragma once

// Variable contexts for free graded-commutative algebras. A context fixes the
// variable order (normal monomial form), the integer degrees, and the policy
// for the formal parameter t.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace curva {

enum class TMode : std::uint8_t {
    none,     // no t slot; monomials must have t-exponent 0
    poly,     // t-exponents >= 0
    laurent,  // any integer t-exponent
    trunc,    // t-exponents in [0, t_trunc]; higher orders are discarded
};

struct VariableSpec {
    std::string name;
    int degree = 0;

    int parity() const { return ((degree % 2) + 2) % 2; }
    bool operator==(const VariableSpec&) const = default;
};

struct AlgebraCtx {
    std::vector<VariableSpec> vars;
    int t_degree = 0;
    TMode t_mode = TMode::none;
    int t_trunc = 0;
    // When set, grading queries are read modulo 2 (degrees are still stored
    // as given). Used by the Z/2-collapsed complexes.
    bool mod2 = false;

    size_t nvars() const { return vars.size(); }

    int index_of(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name == name) return static_cast<int>(i);
        return -1;
    }

    bool all_even() const {
        for (const auto& v : vars)
            if (v.parity() != 0) return false;
        return true;
    }

    bool operator==(const AlgebraCtx&) const = default;
};

using CtxPtr = std::shared_ptr<const AlgebraCtx>;

inline CtxPtr make_ctx(std::vector<VariableSpec> vars, int t_degree = 0,
                       TMode t_mode = TMode::none, int t_trunc = 0,
                       bool mod2 = false) {
    auto c = std::make_shared<AlgebraCtx>();
    c->vars = std::move(vars);
    for (size_t i = 0; i < c->vars.size(); ++i) {
        if (c->vars[i].name == "t")
            throw std::invalid_argument("variable name 't' is reserved for the deformation slot");
        if (c->vars[i].name.empty())
            throw std::invalid_argument("empty variable name");
        for (size_t j = i + 1; j < c->vars.size(); ++j)
            if (c->vars[i].name == c->vars[j].name)
                throw std::invalid_argument("duplicate variable name: " + c->vars[i].name);
    }
    c->t_degree = t_degree;
    c->t_mode = t_mode;
    c->t_trunc = t_trunc;
    c->mod2 = mod2;
    return c;
}

// Shorthand for commutative polynomial rings (all variables even, no t slot).
inline CtxPtr make_ring(const std::vector<std::string>& names) {
    std::vector<VariableSpec> vs;
    vs.reserve(names.size());
    for (const auto& n : names) vs.push_back({n, 0});
    return make_ctx(std::move(vs));
}

inline bool same_ctx(const CtxPtr& a, const CtxPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

inline void require_same_ctx(const CtxPtr& a, const CtxPtr& b) {
    if (!same_ctx(a, b)) throw std::invalid_argument("context mismatch");
}

}  // namespace curva
