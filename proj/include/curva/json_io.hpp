#pragma once

// Canonical JSON forms. nlohmann::json keeps object keys sorted, so dumping a
// report twice yields identical bytes; all numbers that could overflow or
// lose precision travel as decimal-free rational strings.

#include <json.hpp>

#include "curva/gcpoly.hpp"

namespace curva {

using Json = nlohmann::json;

inline const char* tmode_name(TMode m) {
    switch (m) {
        case TMode::none: return "none";
        case TMode::poly: return "polynomial";
        case TMode::laurent: return "laurent";
        case TMode::trunc: return "truncated";
    }
    return "none";
}

inline TMode tmode_from_name(const std::string& s) {
    if (s == "none") return TMode::none;
    if (s == "polynomial") return TMode::poly;
    if (s == "laurent") return TMode::laurent;
    if (s == "truncated") return TMode::trunc;
    throw std::invalid_argument("unknown t_mode: " + s);
}

inline Json ctx_to_json(const AlgebraCtx& c) {
    Json vars = Json::array();
    for (const auto& v : c.vars) vars.push_back({{"name", v.name}, {"degree", v.degree}});
    Json j{{"vars", vars}, {"t_degree", c.t_degree}, {"t_mode", tmode_name(c.t_mode)}};
    if (c.t_mode == TMode::trunc) j["t_trunc"] = c.t_trunc;
    if (c.mod2) j["mod2"] = true;
    return j;
}

inline CtxPtr ctx_from_json(const Json& j) {
    std::vector<VariableSpec> vars;
    for (const auto& v : j.at("vars"))
        vars.push_back({v.at("name").get<std::string>(), v.at("degree").get<int>()});
    TMode mode = j.contains("t_mode") ? tmode_from_name(j["t_mode"].get<std::string>())
                                      : TMode::none;
    return make_ctx(std::move(vars), j.value("t_degree", 0), mode, j.value("t_trunc", 0),
                    j.value("mod2", false));
}

inline Json coef_to_json(const Rat& c) { return c.get_str(); }

inline Json coef_to_json(const RatFunc& c) {
    if (c.den().degree() == 0 && c.num().degree() <= 0) {
        // plain rational; use the scalar string form
        return c.num().is_zero() ? "0" : c.num().coeffs()[0].get_str();
    }
    Json num = Json::array(), den = Json::array();
    for (const auto& a : c.num().coeffs()) num.push_back(a.get_str());
    for (const auto& a : c.den().coeffs()) den.push_back(a.get_str());
    return Json{{"num", num}, {"den", den}};
}

inline void coef_from_json(const Json& j, Rat& out) {
    out = rat_from_string(j.get<std::string>());
}

inline void coef_from_json(const Json& j, RatFunc& out) {
    if (j.is_string()) {
        out = RatFunc(rat_from_string(j.get<std::string>()));
        return;
    }
    std::vector<Rat> num, den;
    for (const auto& a : j.at("num")) num.push_back(rat_from_string(a.get<std::string>()));
    for (const auto& a : j.at("den")) den.push_back(rat_from_string(a.get<std::string>()));
    out = RatFunc(UPoly(std::move(num)), UPoly(std::move(den)));
}

template <class K>
Json poly_to_json(const GCPoly<K>& p) {
    const AlgebraCtx& C = *p.ctx();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::object();
        for (size_t i = 0; i < C.nvars(); ++i)
            if (m.e[i] != 0) mono[C.vars[i].name] = m.e[i];
        if (m.t != 0) mono["t"] = m.t;
        terms.push_back({{"mono", mono}, {"coef", coef_to_json(c)}});
    }
    Json j = ctx_to_json(C);
    j["terms"] = terms;
    return j;
}

template <class K>
GCPoly<K> poly_from_json(const Json& j, CtxPtr ctx = nullptr) {
    if (!ctx) ctx = ctx_from_json(j);
    GCPoly<K> p(ctx);
    for (const auto& tj : j.at("terms")) {
        Mono m;
        m.e.assign(ctx->nvars(), 0);
        for (const auto& [key, val] : tj.at("mono").items()) {
            if (key == "t") {
                m.t = val.template get<int>();
                continue;
            }
            int i = ctx->index_of(key);
            if (i < 0) throw std::invalid_argument("monomial uses unknown variable: " + key);
            m.e[i] = val.template get<int>();
        }
        K c;
        coef_from_json(tj.at("coef"), c);
        p.add_term(std::move(m), std::move(c));
    }
    return p;
}

}  // namespace curva
