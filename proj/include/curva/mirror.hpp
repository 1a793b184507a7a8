#pragma once

// Rings given by generators and relations, with two producers: the quantum
// cohomology of Gr(2, 2n+2) via the Chern-class recursion, and the mirror
// algebra of a divisor configuration whose multiplication table is filled in
// from user-supplied Gromov-Witten numbers. Isomorphisms between two
// presentations are checked by substitution plus Groebner membership, with
// every normal-form reduction kept as a certificate.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "curva/gcpoly.hpp"
#include "curva/groebner.hpp"
#include "curva/json_io.hpp"
#include "curva/parse.hpp"

namespace curva {

// ---------------------------------------------------------------------------
// Presentations

// A commutative ring on named even generators modulo a relation ideal. Some
// generators may be declared invertible; computations then run in an
// extension with a fresh variable g_inv and the relation g * g_inv = 1.
template <class K>
struct RingPresentation {
    CtxPtr ctx;
    std::vector<GCPoly<K>> relations;
    std::vector<std::string> inverted;
};

template <class K>
RingPresentation<K> make_presentation(CtxPtr ctx, std::vector<GCPoly<K>> relations,
                                      std::vector<std::string> inverted = {}) {
    if (!ctx->all_even())
        throw std::invalid_argument("presentation generators must all be even");
    for (const auto& r : relations) require_same_ctx(ctx, r.ctx());
    for (const auto& g : inverted)
        if (ctx->index_of(g) < 0)
            throw std::invalid_argument("inverted generator '" + g +
                                        "' is not a generator");
    return {std::move(ctx), std::move(relations), std::move(inverted)};
}

inline std::string inverse_name(const std::string& g) { return g + "_inv"; }

// Generators followed by one inverse variable per inverted generator.
template <class K>
CtxPtr extended_ctx(const RingPresentation<K>& P) {
    std::vector<VariableSpec> vs = P.ctx->vars;
    for (const auto& g : P.inverted) {
        const auto& spec = P.ctx->vars[P.ctx->index_of(g)];
        vs.push_back({inverse_name(g), -spec.degree});
    }
    return make_ctx(std::move(vs));
}

// The relation ideal in the extended ring, localization relations included.
template <class K>
Ideal<K> presentation_ideal(const RingPresentation<K>& P) {
    CtxPtr ext = extended_ctx(P);
    std::vector<GCPoly<K>> gens;
    gens.reserve(P.relations.size() + P.inverted.size());
    for (const auto& r : P.relations) gens.push_back(r.into(ext));
    for (const auto& g : P.inverted)
        gens.push_back(GCPoly<K>::variable(ext, g) *
                           GCPoly<K>::variable(ext, inverse_name(g)) -
                       GCPoly<K>::constant(ext, FieldOps<K>::one()));
    return make_ideal(ext, std::move(gens));
}

// ---------------------------------------------------------------------------
// Isomorphism checking

// Images for every extended generator of the target presentation, i.e. the
// generators themselves and the declared inverses.
template <class K>
using GenMap = std::map<std::string, GCPoly<K>>;

template <class K>
GenMap<K> identity_map(const RingPresentation<K>& P) {
    CtxPtr ext = extended_ctx(P);
    GenMap<K> m;
    for (const auto& v : ext->vars) m[v.name] = GCPoly<K>::variable(ext, v.name);
    return m;
}

// Parse map entries against a target presentation. Mentioning g_inv for a
// generator that is not declared invertible is rejected rather than treated
// as an unknown name.
template <class K>
GenMap<K> parse_generator_map(const RingPresentation<K>& target,
                              const std::map<std::string, std::string>& entries) {
    std::vector<VariableSpec> vs = target.ctx->vars;
    for (const auto& v : target.ctx->vars) vs.push_back({inverse_name(v.name), -v.degree});
    CtxPtr everything = make_ctx(std::move(vs));
    CtxPtr ext = extended_ctx(target);
    std::set<std::string> declared(target.inverted.begin(), target.inverted.end());
    GenMap<K> out;
    for (const auto& [name, src] : entries) {
        GCPoly<K> p = parse_poly<K>(everything, src);
        for (const auto& v : target.ctx->vars) {
            if (declared.count(v.name)) continue;
            GCPoly<K> probe = p.derive_left(inverse_name(v.name));
            if (!probe.is_zero())
                throw std::invalid_argument("image of '" + name + "' inverts '" +
                                            v.name +
                                            "', which is not declared invertible");
        }
        out[name] = p.into(ext);
    }
    return out;
}

template <class K>
struct IsoReduction {
    std::string label;
    GCPoly<K> remainder;  // zero when the check passed
};

template <class K>
struct IsoCertificate {
    bool ok = false;
    std::vector<IsoReduction<K>> reductions;
};

namespace detail {

template <class K>
GCPoly<K> apply_gen_map(const GenMap<K>& images, const GCPoly<K>& p, const CtxPtr& to) {
    std::vector<GCPoly<K>> imgs;
    imgs.reserve(p.ctx()->nvars());
    for (const auto& v : p.ctx()->vars) {
        auto it = images.find(v.name);
        if (it == images.end())
            throw std::invalid_argument("the map misses an image for generator '" +
                                        v.name + "'");
        imgs.push_back(it->second.into(to));
    }
    return p.substitute(to, imgs);
}

}  // namespace detail

// True exactly when fwd and inv descend to mutually inverse ring maps: each
// side's relations reduce to zero in the other, and both round trips fix
// every generator modulo the relation ideal.
template <class K>
IsoCertificate<K> verify_iso(const RingPresentation<K>& A, const RingPresentation<K>& B,
                             const GenMap<K>& fwd, const GenMap<K>& inv) {
    Ideal<K> IA = presentation_ideal(A);
    Ideal<K> IB = presentation_ideal(B);
    GroebnerBasis<K> GA = buchberger(IA);
    GroebnerBasis<K> GB_ = buchberger(IB);

    IsoCertificate<K> cert;
    auto record = [&](std::string label, GCPoly<K> rem) {
        cert.reductions.push_back({std::move(label), std::move(rem)});
    };

    for (const auto& r : IA.gens)
        record("A relation " + r.str() + " in B",
               normal_form(GB_, detail::apply_gen_map(fwd, r, IB.ctx)));
    for (const auto& r : IB.gens)
        record("B relation " + r.str() + " in A",
               normal_form(GA, detail::apply_gen_map(inv, r, IA.ctx)));
    for (const auto& v : IA.ctx->vars) {
        GCPoly<K> x = GCPoly<K>::variable(IA.ctx, v.name);
        GCPoly<K> round = detail::apply_gen_map(inv, detail::apply_gen_map(fwd, x, IB.ctx), IA.ctx);
        record("round trip of " + v.name + " through B", normal_form(GA, round - x));
    }
    for (const auto& v : IB.ctx->vars) {
        GCPoly<K> x = GCPoly<K>::variable(IB.ctx, v.name);
        GCPoly<K> round = detail::apply_gen_map(fwd, detail::apply_gen_map(inv, x, IA.ctx), IB.ctx);
        record("round trip of " + v.name + " through A", normal_form(GB_, round - x));
    }

    cert.ok = true;
    for (const auto& r : cert.reductions)
        if (!r.remainder.is_zero()) cert.ok = false;
    return cert;
}

// ---------------------------------------------------------------------------
// Divisor configurations

// Divisors are numbered from 1. A subset is a strictly increasing list of
// divisor indices; the empty subset stands for the ambient space.
using Subset = std::vector<int>;

inline std::string subset_str(const Subset& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// A homology class on one stratum component, identified by its intersection
// numbers with the divisors. These stand in for the curve classes a
// Gromov-Witten term can live on; the builder never computes them.
struct CurveClass {
    std::string name;
    Subset stratum;      // empty for a class on the ambient space
    long component = 0;  // which component of the stratum carries it
    std::vector<long> meets;
};

struct GwInput {
    std::string cls;
    Subset i, j;
    Rat value;
};

struct Stratum {
    Subset subset;
    long components = 1;
};

struct DivisorConfig {
    std::vector<std::string> divisors;
    std::vector<Stratum> strata;  // only nonempty intersections are listed
    std::vector<CurveClass> classes;
    std::vector<GwInput> gw;
};

namespace detail {

inline std::vector<long> indicator(const Subset& s, size_t n) {
    std::vector<long> v(n, 0);
    for (int i : s) v[size_t(i - 1)] += 1;
    return v;
}

inline bool subsets_disjoint(const Subset& a, const Subset& b) {
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    return true;
}

}  // namespace detail

// Component count of a stratum; 0 when the intersection is empty.
inline long stratum_components(const DivisorConfig& cfg, const Subset& s) {
    for (const auto& st : cfg.strata)
        if (st.subset == s) return st.components;
    return 0;
}

// Generator name for a stratum component: the divisor indices after an 'a',
// with the component appended only when the stratum is disconnected.
inline std::string mirror_generator_name(const DivisorConfig& cfg, const Subset& s,
                                         long component) {
    std::string sep = cfg.divisors.size() > 9 ? "_" : "";
    std::string name = "a";
    for (int i : s) name += sep + std::to_string(i);
    if (stratum_components(cfg, s) > 1) name += "_" + std::to_string(component);
    return name;
}

inline void validate_config(const DivisorConfig& cfg) {
    size_t j = cfg.divisors.size();
    if (j == 0) throw std::invalid_argument("divisor list is empty");

    std::map<Subset, long> table;
    for (const auto& st : cfg.strata) {
        const Subset& s = st.subset;
        if (s.empty())
            throw std::invalid_argument("the ambient space does not belong in the stratum list");
        for (size_t k = 0; k < s.size(); ++k) {
            if (s[k] < 1 || s[k] > long(j))
                throw std::invalid_argument("stratum " + subset_str(s) +
                                            " mentions a divisor out of range");
            if (k && s[k] <= s[k - 1])
                throw std::invalid_argument("stratum " + subset_str(s) +
                                            " must list divisors in increasing order");
        }
        if (st.components < 1)
            throw std::invalid_argument("stratum " + subset_str(s) +
                                        " needs at least one component");
        if (!table.emplace(s, st.components).second)
            throw std::invalid_argument("duplicate stratum " + subset_str(s));
    }
    for (size_t i = 1; i <= j; ++i)
        if (!table.count(Subset{int(i)}))
            throw std::invalid_argument("divisor " + std::to_string(i) +
                                        " has no singleton stratum");
    // Downward closure: drop any one index and the smaller stratum must exist.
    for (const auto& [s, c] : table) {
        (void)c;
        if (s.size() < 2) continue;
        for (size_t k = 0; k < s.size(); ++k) {
            Subset sub = s;
            sub.erase(sub.begin() + long(k));
            if (!table.count(sub))
                throw std::invalid_argument("intersection table is not downward closed: " +
                                            subset_str(s) + " is listed but " +
                                            subset_str(sub) + " is not");
        }
    }

    std::set<std::string> class_names;
    for (const auto& c : cfg.classes) {
        if (c.name.empty()) throw std::invalid_argument("curve class with empty name");
        if (!class_names.insert(c.name).second)
            throw std::invalid_argument("duplicate curve class '" + c.name + "'");
        if (!c.stratum.empty()) {
            auto it = table.find(c.stratum);
            if (it == table.end())
                throw std::invalid_argument("curve class '" + c.name +
                                            "' lives on an absent stratum " +
                                            subset_str(c.stratum));
            if (c.component < 0 || c.component >= it->second)
                throw std::invalid_argument("curve class '" + c.name +
                                            "' names a component out of range");
        } else if (c.component != 0) {
            throw std::invalid_argument("curve class '" + c.name +
                                        "' on the ambient space takes component 0");
        }
        if (c.meets.size() != j)
            throw std::invalid_argument("curve class '" + c.name +
                                        "' needs one intersection number per divisor");
        if (std::all_of(c.meets.begin(), c.meets.end(), [](long v) { return v == 0; }))
            throw std::invalid_argument("curve class '" + c.name + "' meets no divisor");
    }

    std::set<std::tuple<std::string, Subset, Subset>> seen;
    for (const auto& in : cfg.gw) {
        const CurveClass* cls = nullptr;
        for (const auto& c : cfg.classes)
            if (c.name == in.cls) cls = &c;
        if (!cls)
            throw std::invalid_argument("gw input references unknown class '" + in.cls + "'");
        Subset a = std::min(in.i, in.j), b = std::max(in.i, in.j);
        if (!table.count(a) || !table.count(b))
            throw std::invalid_argument("gw input for class '" + in.cls +
                                        "' pairs absent strata");
        if (a == b) {
            if (table[a] < 2)
                throw std::invalid_argument("gw input for class '" + in.cls + "' pairs " +
                                            subset_str(a) +
                                            " with itself, but the stratum is connected");
        } else if (!detail::subsets_disjoint(a, b)) {
            throw std::invalid_argument("gw input for class '" + in.cls + "' pairs " +
                                        subset_str(a) + " with " + subset_str(b) +
                                        ": the builder forms no such product");
        }
        if (!seen.insert({in.cls, a, b}).second)
            throw std::invalid_argument("duplicate gw input for class '" + in.cls +
                                        "' on " + subset_str(a) + " * " + subset_str(b));
        // The admitted classes are exactly those matching the vector equation.
        std::vector<long> want = detail::indicator(a, j);
        std::vector<long> vb = detail::indicator(b, j);
        std::vector<long> vk = detail::indicator(cls->stratum, j);
        for (size_t i = 0; i < j; ++i) want[i] += vb[i] - vk[i];
        if (cls->meets != want)
            throw std::invalid_argument("gw input for class '" + in.cls +
                                        "' fails the vector equation on " + subset_str(a) +
                                        " * " + subset_str(b));
    }
}

// The mirror algebra of a divisor configuration. One generator per stratum
// component, ordered by subset size, then subset, then component. A product
// of two generators is rewritten whenever their subsets are disjoint or they
// are distinct components of one stratum; overlapping subsets are left
// unconstrained. The rewrite is the sum over the union stratum's components
// plus one term per admitted curve class, weighted by its supplied number.
inline RingPresentation<Rat> mirror_ring(const DivisorConfig& cfg) {
    validate_config(cfg);
    size_t j = cfg.divisors.size();

    struct Gen {
        Subset subset;
        long component;
    };
    std::vector<Stratum> strata = cfg.strata;
    std::sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
        return std::make_pair(a.subset.size(), a.subset) <
               std::make_pair(b.subset.size(), b.subset);
    });
    std::vector<Gen> gens;
    std::vector<VariableSpec> vars;
    for (const auto& st : strata)
        for (long m = 0; m < st.components; ++m) {
            gens.push_back({st.subset, m});
            vars.push_back({mirror_generator_name(cfg, st.subset, m),
                            2 * int(st.subset.size())});
        }
    CtxPtr ctx = make_ctx(vars);

    auto gen_poly = [&](const Subset& s, long m) {
        return QPoly::variable(ctx, mirror_generator_name(cfg, s, m));
    };
    std::map<std::tuple<std::string, Subset, Subset>, Rat> gw;
    for (const auto& in : cfg.gw)
        gw[{in.cls, std::min(in.i, in.j), std::max(in.i, in.j)}] = in.value;

    std::vector<QPoly> relations;
    for (size_t p = 0; p < gens.size(); ++p) {
        for (size_t q = p + 1; q < gens.size(); ++q) {
            const Gen& a = gens[p];
            const Gen& b = gens[q];
            bool same_stratum = a.subset == b.subset;
            if (!same_stratum && !detail::subsets_disjoint(a.subset, b.subset))
                continue;  // intersection behavior unknown, impose nothing

            QPoly rhs = QPoly::zero(ctx);
            if (!same_stratum) {
                // Distinct components of one stratum never meet, so the union
                // term only appears for honestly disjoint subsets.
                Subset u;
                std::merge(a.subset.begin(), a.subset.end(), b.subset.begin(),
                           b.subset.end(), std::back_inserter(u));
                for (long m = 0; m < stratum_components(cfg, u); ++m) rhs += gen_poly(u, m);
            }

            std::vector<long> need = detail::indicator(a.subset, j);
            std::vector<long> vb = detail::indicator(b.subset, j);
            for (size_t i = 0; i < j; ++i) need[i] += vb[i];
            Subset ki = std::min(a.subset, b.subset);
            Subset kj = std::max(a.subset, b.subset);
            for (const auto& c : cfg.classes) {
                std::vector<long> vk = detail::indicator(c.stratum, j);
                bool match = true;
                for (size_t i = 0; i < j && match; ++i)
                    if (c.meets[i] != need[i] - vk[i]) match = false;
                if (!match) continue;
                auto it = gw.find({c.name, ki, kj});
                if (it == gw.end())
                    throw std::invalid_argument(
                        "missing GW input for class '" + c.name + "' on the product " +
                        mirror_generator_name(cfg, a.subset, a.component) + " * " +
                        mirror_generator_name(cfg, b.subset, b.component));
                if (curva::is_zero(it->second)) continue;
                QPoly term = c.stratum.empty()
                                 ? QPoly::constant(ctx, it->second)
                                 : gen_poly(c.stratum, c.component).scaled(it->second);
                rhs += term;
            }
            relations.push_back(gen_poly(a.subset, a.component) *
                                    gen_poly(b.subset, b.component) -
                                rhs);
        }
    }
    return make_presentation(ctx, std::move(relations));
}

// ---------------------------------------------------------------------------
// Grassmannian quantum cohomology

// Chern-relation solutions: y_0 = 1 and sum_i x_i y_{j-i} = 0 with x_0 = 1,
// so each y is determined by the two before it.
inline std::vector<TPoly> grassmannian_y(const CtxPtr& ctx, int count) {
    TPoly x1 = TPoly::variable(ctx, "x1");
    TPoly x2 = TPoly::variable(ctx, "x2");
    std::vector<TPoly> ys;
    ys.push_back(TPoly::constant(ctx, RatFunc::one()));
    for (int k = 1; k <= count; ++k) {
        TPoly y = -(x1 * ys[size_t(k - 1)]);
        if (k >= 2) y -= x2 * ys[size_t(k - 2)];
        ys.push_back(y);
    }
    return ys;
}

struct GrassmannianQh {
    RingPresentation<RatFunc> ring;  // x1, x2 with the two defining relations
    long dimension = 0;              // Q(t)-dimension of the full quotient
    RingPresentation<RatFunc> zero_eigenspace;  // reduced basis of the x1 = 0 slice
    long zero_dimension = 0;
    int t_sign = 0;  // s in the slice relation x2^(n+1) = s * t
};

// QH*(Gr(2, 2n+2)) as Q(t)[x1, x2] / (y_{2n+1}, y_{2n+2} - t), together with
// the x1 = 0 slice cutting out the zero eigenspace of quantum multiplication
// by x1. The recursion produces (-x2)^(n+1) where the closed form has
// x2^(n+1); the slice keeps the recursion's sign and records it.
inline GrassmannianQh grassmannian_qh(int n) {
    if (n < 1) throw std::invalid_argument("grassmannian_qh needs n >= 1");
    CtxPtr ctx = make_ctx({{"x1", 2}, {"x2", 4}});
    std::vector<TPoly> ys = grassmannian_y(ctx, 2 * n + 2);
    TPoly tc = TPoly::constant(ctx, RatFunc::t());

    GrassmannianQh out;
    std::vector<TPoly> rels = {ys[size_t(2 * n + 1)], ys[size_t(2 * n + 2)] - tc};
    out.ring = make_presentation(ctx, rels);
    QuotientInfo full = quotient_dimension(buchberger(make_ideal(ctx, rels)));
    if (!full.finite)
        throw std::runtime_error("quantum relations do not cut out a finite quotient");
    out.dimension = full.dimension;

    std::vector<TPoly> slice = rels;
    slice.push_back(TPoly::variable(ctx, "x1"));
    GroebnerBasis<RatFunc> G = buchberger(make_ideal(ctx, slice));
    out.zero_eigenspace = make_presentation(ctx, G.basis);
    QuotientInfo zero = quotient_dimension(G);
    if (!zero.finite)
        throw std::runtime_error("the x1 = 0 slice is not finite dimensional");
    out.zero_dimension = zero.dimension;

    // The reduced basis is x1 together with x2^(n+1) - s*t; read off s.
    for (const auto& g : G.basis) {
        if (g.terms().size() != 2) continue;
        for (const auto& [m, c] : g.terms()) {
            if (!m.is_one()) continue;
            if (c == -RatFunc::t())
                out.t_sign = 1;
            else if (c == RatFunc::t())
                out.t_sign = -1;
        }
    }
    if (out.t_sign == 0)
        throw std::runtime_error("slice basis has no pure x2 relation against t");
    return out;
}

// ---------------------------------------------------------------------------
// JSON forms

inline Json subset_to_json(const Subset& s) { return Json(s); }

inline Subset subset_from_json(const Json& j) {
    Subset s;
    for (const auto& v : j) s.push_back(v.get<int>());
    return s;
}

inline Json divisor_config_to_json(const DivisorConfig& cfg) {
    Json j;
    j["divisors"] = cfg.divisors;
    j["strata"] = Json::array();
    for (const auto& st : cfg.strata)
        j["strata"].push_back({{"subset", subset_to_json(st.subset)},
                               {"components", st.components}});
    j["classes"] = Json::array();
    for (const auto& c : cfg.classes) {
        Json e = {{"name", c.name}, {"meets", c.meets}};
        if (!c.stratum.empty()) {
            e["stratum"] = subset_to_json(c.stratum);
            e["component"] = c.component;
        }
        j["classes"].push_back(e);
    }
    j["gw"] = Json::array();
    for (const auto& in : cfg.gw)
        j["gw"].push_back({{"class", in.cls},
                           {"i", subset_to_json(in.i)},
                           {"j", subset_to_json(in.j)},
                           {"value", in.value.get_str()}});
    return j;
}

inline DivisorConfig divisor_config_from_json(const Json& j) {
    DivisorConfig cfg;
    cfg.divisors = j.at("divisors").get<std::vector<std::string>>();
    for (const auto& e : j.at("strata"))
        cfg.strata.push_back({subset_from_json(e.at("subset")),
                              e.at("components").get<long>()});
    if (j.count("classes"))
        for (const auto& e : j.at("classes")) {
            CurveClass c;
            c.name = e.at("name").get<std::string>();
            if (e.count("stratum")) {
                c.stratum = subset_from_json(e.at("stratum"));
                c.component = e.value("component", 0L);
            }
            for (const auto& v : e.at("meets")) c.meets.push_back(v.get<long>());
            cfg.classes.push_back(std::move(c));
        }
    if (j.count("gw"))
        for (const auto& e : j.at("gw"))
            cfg.gw.push_back({e.at("class").get<std::string>(),
                              subset_from_json(e.at("i")), subset_from_json(e.at("j")),
                              rat_from_string(e.at("value").get<std::string>())});
    validate_config(cfg);
    return cfg;
}

// Preset files hold a family name and a list of labeled configurations.
inline std::vector<std::pair<std::string, DivisorConfig>> load_divisor_preset(const Json& j) {
    std::vector<std::pair<std::string, DivisorConfig>> out;
    for (const auto& m : j.at("members"))
        out.emplace_back(m.at("label").get<std::string>(),
                         divisor_config_from_json(m.at("config")));
    return out;
}

template <class K>
Json presentation_to_json(const RingPresentation<K>& P) {
    Json j;
    j["generators"] = Json::array();
    for (const auto& v : P.ctx->vars)
        j["generators"].push_back({{"name", v.name}, {"degree", v.degree}});
    j["inverted"] = P.inverted;
    j["relations"] = Json::array();
    for (const auto& r : P.relations) j["relations"].push_back(r.str());
    return j;
}

}  // namespace curva
