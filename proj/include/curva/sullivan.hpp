#pragma once

// Pure Sullivan models (polynomial base, odd exterior part, differential
// d(beta_i) = f_i with f_i free of constant and linear terms) and the
// deformation pipeline that runs on top of them: assemble the superpotential
// W = t w(u) + sum f_i u_i over Q(t), decide whether it has an isolated
// singularity through the Jacobian ideal, and present the Hochschild
// cohomology of the deformed category either as the Jacobian ring (isolated
// case) or through a twisted polyvector window (non-isolated case).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curva/groebner.hpp"
#include "curva/polyvector.hpp"

namespace curva {

struct SullivanModel {
    std::vector<VariableSpec> x_vars;     // even generators, negative degree
    std::vector<VariableSpec> beta_vars;  // odd generators
    CtxPtr x_ctx;                         // Q[x...]
    std::vector<GCPoly<Rat>> f;           // d(beta_i), living in x_ctx
    // Koszul duals: u_i pairs with beta_i, e_j with x_j.
    std::vector<std::string> u_names, e_names;
    CtxPtr u_ctx;    // Q[u...], where potentials are written
    CtxPtr jac_ctx;  // Q(t)[x..., u...], home of the superpotential
};

// Coefficientwise lift of a rational polynomial into a Q(t) ring covering
// the same variable names.
inline TPoly lift_to_t(const CtxPtr& target, const GCPoly<Rat>& p) {
    TPoly out(target);
    std::vector<int> where;
    for (const auto& v : p.ctx()->vars) where.push_back(target->index_of(v.name));
    for (const auto& [m, c] : p.terms()) {
        Mono im{std::vector<std::int32_t>(target->nvars(), 0), 0};
        for (size_t j = 0; j < where.size(); ++j) {
            if (m.e[j] == 0) continue;
            if (where[j] < 0)
                throw std::invalid_argument("variable " + p.ctx()->vars[j].name +
                                            " is missing from the Q(t) ring");
            im.e[static_cast<size_t>(where[j])] = m.e[j];
        }
        out.add_term(std::move(im), RatFunc(c));
    }
    return out;
}

inline SullivanModel make_model(std::vector<VariableSpec> x_specs,
                                std::vector<VariableSpec> beta_specs,
                                std::vector<GCPoly<Rat>> f_list) {
    for (const auto& x : x_specs)
        if (x.degree >= 0 || x.parity() != 0)
            throw std::invalid_argument("x variable " + x.name +
                                        " must have negative even degree");
    for (const auto& b : beta_specs)
        if (b.parity() != 1)
            throw std::invalid_argument("beta variable " + b.name +
                                        " must have odd degree");
    if (f_list.size() != beta_specs.size())
        throw std::invalid_argument("need exactly one differential per beta");

    SullivanModel M;
    M.x_vars = std::move(x_specs);
    M.beta_vars = std::move(beta_specs);
    std::vector<std::string> x_names;
    for (const auto& x : M.x_vars) x_names.push_back(x.name);
    M.x_ctx = make_ring(x_names);

    for (size_t i = 0; i < f_list.size(); ++i) {
        const auto& fi = f_list[i];
        for (size_t vi = 0; vi < fi.ctx()->vars.size(); ++vi) {
            if (fi.ctx()->vars[vi].parity() == 0) continue;
            // an odd variable that never occurs is harmless
            for (const auto& [m, c] : fi.terms()) {
                (void)c;
                if (m.e[vi] > 0)
                    throw std::invalid_argument(
                        "differential for " + M.beta_vars[i].name +
                        " depends on the odd variable " + fi.ctx()->vars[vi].name);
            }
        }
        GCPoly<Rat> in_x = fi.into(M.x_ctx);
        long want = M.beta_vars[i].degree - 1;
        for (const auto& [m, c] : in_x.terms()) {
            (void)c;
            if (m.weight() < 2)
                throw std::invalid_argument("differential for " +
                                            M.beta_vars[i].name +
                                            " must have no constant or linear term");
            long d = 0;
            for (size_t j = 0; j < M.x_vars.size(); ++j)
                d += static_cast<long>(m.e[j]) * M.x_vars[j].degree;
            if (d != want)
                throw std::invalid_argument(
                    "differential for " + M.beta_vars[i].name + " has a term of degree " +
                    std::to_string(d) + ", expected " + std::to_string(want));
        }
        M.f.push_back(std::move(in_x));
    }

    for (const auto& b : M.beta_vars) M.u_names.push_back("u_" + b.name);
    for (const auto& x : M.x_vars) M.e_names.push_back("e_" + x.name);
    M.u_ctx = make_ring(M.u_names);
    std::vector<std::string> jac_names = x_names;
    jac_names.insert(jac_names.end(), M.u_names.begin(), M.u_names.end());
    M.jac_ctx = make_ring(jac_names);
    return M;
}

// The polyvector context of the model: base variables x then beta, duals
// named e_<x> and u_<beta>. Degrees are the honest ones; the mod 2 collapse
// turns them into the parity grading the twisted complexes use.
inline PolyCtx model_poly_ctx(const SullivanModel& M, int t_degree = 0,
                              TMode t_mode = TMode::none, int t_trunc = 0) {
    std::vector<VariableSpec> base = M.x_vars;
    base.insert(base.end(), M.beta_vars.begin(), M.beta_vars.end());
    std::vector<std::string> duals = M.e_names;
    duals.insert(duals.end(), M.u_names.begin(), M.u_names.end());
    return make_poly_ctx(std::move(base), std::move(duals), t_degree, t_mode,
                         t_trunc, true);
}

// v = sum f_i(x) u_i, the model's vector field written as a polyvector.
inline GCPoly<Rat> model_vector_field(const SullivanModel& M, const PolyCtx& pc) {
    GCPoly<Rat> v(pc.full);
    for (size_t i = 0; i < M.f.size(); ++i)
        v += M.f[i].into(pc.full) * GCPoly<Rat>::variable(pc.full, M.u_names[i]);
    return v;
}

// W = t w(u) + sum f_i(x) u_i in Q(t)[x, u]. The potential may be written
// over any ring whose variables are the duals.
inline TPoly superpotential(const SullivanModel& M, const GCPoly<Rat>& w) {
    for (size_t vi = 0; vi < w.ctx()->vars.size(); ++vi) {
        const std::string& name = w.ctx()->vars[vi].name;
        bool known = false;
        for (const auto& u : M.u_names) known = known || u == name;
        if (known) continue;
        for (const auto& [m, c] : w.terms()) {
            (void)c;
            if (m.e[vi] > 0)
                throw std::invalid_argument("potential involves " + name +
                                            ", which is not a dual variable");
        }
    }
    TPoly W = lift_to_t(M.jac_ctx, w).scaled(RatFunc::t());
    for (size_t i = 0; i < M.f.size(); ++i)
        W += lift_to_t(M.jac_ctx, M.f[i]) *
             TPoly::variable(M.jac_ctx, M.u_names[i]);
    return W;
}

// Jacobian ideal (dW/dx_j, dW/du_i) of the superpotential.
inline Ideal<RatFunc> jacobian_ideal(const SullivanModel& M,
                                     const GCPoly<Rat>& w) {
    TPoly W = superpotential(M, w);
    std::vector<TPoly> partials;
    for (size_t i = 0; i < M.jac_ctx->nvars(); ++i)
        partials.push_back(W.derive_left(static_cast<int>(i)));
    return make_ideal(M.jac_ctx, partials);
}

struct IsolatedReport {
    bool isolated = false;
    QuotientInfo jacobian;  // staircase of Q(t)[x,u]/(dW)
};

inline IsolatedReport isolated_singularity(const SullivanModel& M,
                                           const GCPoly<Rat>& w) {
    auto G = buchberger(jacobian_ideal(M, w));
    IsolatedReport rep;
    rep.jacobian = quotient_dimension(G);
    rep.isolated = rep.jacobian.finite;
    return rep;
}

// The product-of-spheres shortcut: w has an isolated singularity along the
// u directions iff Q[u]/(u_i dw/du_i) is finite dimensional.
inline QuotientInfo u_jacobian(const SullivanModel& M, const GCPoly<Rat>& w) {
    GCPoly<Rat> wu = w.into(M.u_ctx);
    std::vector<GCPoly<Rat>> gens;
    for (size_t i = 0; i < M.u_ctx->nvars(); ++i)
        gens.push_back(GCPoly<Rat>::variable(M.u_ctx, static_cast<int>(i)) *
                       wu.derive_left(static_cast<int>(i)));
    return quotient_dimension(buchberger(make_ideal(M.u_ctx, gens)));
}

// Hochschild cohomology of the deformed category. With an isolated
// singularity this is the Jacobian ring, graded by the internal degree of
// its staircase basis (duals count with degree -1 - deg beta); every class
// lands in even degree since both x and u carry even degrees. Otherwise the
// report falls back to the twisted polyvector window over the background
// sum f_i u_i + t w(u).
struct HhMfReport {
    bool isolated = false;
    QuotientInfo jacobian;
    std::vector<long> degrees;  // one per staircase monomial
    bool even_concentrated = false;
    std::vector<CohomologyBlock<Rat>> window;  // non-isolated branch only
};

inline HhMfReport hh_mf(const SullivanModel& M, const GCPoly<Rat>& w,
                        int weight_bound = 6, int t_degree = -2) {
    HhMfReport rep;
    auto iso = isolated_singularity(M, w);
    rep.isolated = iso.isolated;
    rep.jacobian = iso.jacobian;
    if (rep.isolated) {
        rep.even_concentrated = true;
        for (const auto& m : rep.jacobian.staircase) {
            long d = 0;
            for (size_t j = 0; j < M.x_vars.size(); ++j)
                d += static_cast<long>(m.e[j]) * M.x_vars[j].degree;
            for (size_t i = 0; i < M.beta_vars.size(); ++i)
                d += static_cast<long>(m.e[M.x_vars.size() + i]) *
                     (-1 - M.beta_vars[i].degree);
            rep.degrees.push_back(d);
            if (((d % 2) + 2) % 2 != 0) rep.even_concentrated = false;
        }
        return rep;
    }
    GCPoly<Rat> wu = w.into(M.u_ctx);
    bool curved = !wu.is_zero();
    PolyCtx pc = curved
                     ? model_poly_ctx(M, t_degree, TMode::trunc, weight_bound)
                     : model_poly_ctx(M);
    GCPoly<Rat> bg = model_vector_field(M, pc);
    if (curved)
        bg += wu.into(pc.full) * GCPoly<Rat>::t_power(pc.full, 1);
    rep.window = cohomology_window(pc, bg, 0, 1, weight_bound);
    return rep;
}

// Model files: {x: [{name, degree}], beta: [{name, degree}], f: {beta: poly}}.
inline Json model_to_json(const SullivanModel& M) {
    Json xs = Json::array(), bs = Json::array(), fs = Json::object();
    for (const auto& x : M.x_vars) xs.push_back({{"name", x.name}, {"degree", x.degree}});
    for (const auto& b : M.beta_vars) bs.push_back({{"name", b.name}, {"degree", b.degree}});
    for (size_t i = 0; i < M.beta_vars.size(); ++i)
        fs[M.beta_vars[i].name] = poly_to_json(M.f[i]);
    return Json{{"x", xs}, {"beta", bs}, {"f", fs}};
}

inline SullivanModel model_from_json(const Json& j) {
    std::vector<VariableSpec> xs, bs;
    for (const auto& x : j.at("x"))
        xs.push_back({x.at("name").get<std::string>(), x.at("degree").get<int>()});
    for (const auto& b : j.at("beta"))
        bs.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
    std::vector<GCPoly<Rat>> fs;
    for (const auto& b : bs) {
        if (!j.at("f").contains(b.name))
            throw std::invalid_argument("model file misses the differential for " +
                                        b.name);
        fs.push_back(poly_from_json<Rat>(j.at("f").at(b.name)));
    }
    return make_model(std::move(xs), std::move(bs), std::move(fs));
}

}  // namespace curva
