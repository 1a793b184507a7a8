#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curva/parse.hpp"
#include "curva/polyvector.hpp"

using namespace curva;

// two-sphere model: even base x, odd base e, duals dx (odd) and u (even)
static PolyCtx s2_ctx() {
    return make_poly_ctx({{"x", 0}, {"e", 1}}, {"dx", "u"}, 0, TMode::none, 0, true);
}

TEST_CASE("schouten pairs each variable with its dual") {
    auto pc = s2_ctx();
    auto x = QPoly::variable(pc.full, "x");
    auto e = QPoly::variable(pc.full, "e");
    auto dx = QPoly::variable(pc.full, "dx");
    auto u = QPoly::variable(pc.full, "u");

    // dual-free arguments commute
    CHECK(schouten(pc, x * x, x + QPoly::constant(pc.full, Rat(2))).is_zero());
    CHECK(schouten(pc, x * e, x * x * e).is_zero());

    // a bare dual acts as the derivative
    CHECK(schouten(pc, dx, x * x * x) == x.pow(2).scaled(Rat(3)));

    // contraction of the vector field x^2 d/de against e
    auto v = x * x * u;
    CHECK(schouten(pc, v, e) == x * x);
    CHECK(is_flat(pc, v));
    CHECK(twisted_diff(pc, v, v).is_zero());
    CHECK(twisted_diff(pc, v, dx) == -(x * u).scaled(Rat(2)));
    CHECK(twisted_diff(pc, v, QPoly::constant(pc.full, Rat(1))).is_zero());
}

TEST_CASE("schouten rejects mixed contexts and non-flat backgrounds") {
    auto pc = s2_ctx();
    auto other = make_poly_ctx({{"y", 0}});
    CHECK_THROWS_AS(
        schouten(pc, QPoly::variable(pc.full, "x"), QPoly::variable(other.full, "y")),
        std::invalid_argument);

    // a bivector that fails the Jacobi identity is not flat
    auto h = make_poly_ctx({{"x", 0}, {"y", 0}, {"z", 0}}, {}, 0, TMode::none, 0, true);
    auto bad = parse_qpoly(h.full, "z*dx*dy + x*dx*dz");
    CHECK(!is_flat(h, bad));
    CHECK_THROWS_AS(twisted_diff(h, bad, bad), std::invalid_argument);

    // any vector field self-brackets to zero
    auto vf = parse_qpoly(h.full, "x*dx + y*z*dy");
    CHECK(is_flat(h, vf));
}

TEST_CASE("maurer-cartan residuals") {
    auto pc = s2_ctx();
    auto x = QPoly::variable(pc.full, "x");
    auto u = QPoly::variable(pc.full, "u");
    auto v = x * x * u;

    auto prob = make_mc_problem(pc, v, QPoly(pc.full), 4);
    CHECK(mc_residual(prob).is_zero());

    // deformations built from the duals alone stay flat over a Sullivan field
    auto prob2 = make_mc_problem(pc, v, u * u * u, 4);
    CHECK(mc_residual(prob2).is_zero());

    auto h = make_poly_ctx({{"x", 0}, {"y", 0}, {"z", 0}}, {}, 0, TMode::none, 0, true);
    CHECK_THROWS_AS(
        make_mc_problem(h, parse_qpoly(h.full, "z*dx*dy + x*dx*dz"), QPoly(h.full), 2),
        std::invalid_argument);
}

static PolyCtx gauge_ctx() {
    return make_poly_ctx({{"u", 2}, {"q", -2}}, {}, 0, TMode::poly);
}

TEST_CASE("gauge transformation reproduces the closed form") {
    auto pc = gauge_ctx();
    auto phi = parse_qpoly(pc.full, "-1/2*u*dq*t");
    auto mu = parse_qpoly(pc.full, "-u*t - u^2*q*t");
    auto bg = parse_qpoly(pc.full, "u*q^2");

    auto out = gauge(pc, phi, mu, bg, 2);
    CHECK(out == parse_qpoly(pc.full, "-u*t + 1/4*u^3*t^2"));
    CHECK(out.str() == "-u*t + 1/4*u^3*t^2");

    // higher truncation orders only confirm the series has stopped
    CHECK(gauge(pc, phi, mu, bg, 4) == out);

    // identity gauge
    CHECK(gauge(pc, QPoly(pc.full), mu, bg, 4) == mu);

    // group law: phi then -phi is the identity up to the truncation order
    auto there = gauge(pc, phi, mu, bg, 3);
    CHECK(gauge(pc, -phi, there, bg, 3) == mu);
}

TEST_CASE("window cohomology with zero background counts monomials") {
    auto pc = s2_ctx();
    auto blocks = cohomology_window(pc, QPoly(pc.full), 0, 1, 2);
    auto dim_at = [&](long d, int w) -> long {
        for (const auto& b : blocks)
            if (b.degree == d && b.weight == w) return b.dimension;
        return 0;
    };
    CHECK(dim_at(0, 0) == 1);  // 1
    CHECK(dim_at(1, 0) == 0);
    CHECK(dim_at(0, 1) == 2);  // x, u
    CHECK(dim_at(1, 1) == 2);  // e, dx
    CHECK(dim_at(0, 2) == 4);  // x^2, x*u, u^2, e*dx
    CHECK(dim_at(1, 2) == 4);  // x*e, x*dx, e*u, u*dx
    for (const auto& b : blocks) CHECK(b.stable);
}

TEST_CASE("two-sphere twisted complex matches its known presentation") {
    auto pc = s2_ctx();
    auto x = QPoly::variable(pc.full, "x");
    auto u = QPoly::variable(pc.full, "u");
    auto v = x * x * u;

    auto blocks = cohomology_window(pc, v, 0, 1, 7);
    auto dim_at = [&](long d, int w) -> long {
        for (const auto& b : blocks)
            if (b.degree == d && b.weight == w) return b.dimension;
        return 0;  // an absent block has an empty slice
    };
    // weight-by-weight dimensions of C[u,a] (x) Lambda(b) / (a^2, ab, a*u)
    long even_expect[7] = {1, 2, 1, 1, 1, 1, 1};
    long odd_expect[7] = {0, 0, 1, 1, 1, 1, 1};
    for (int w = 0; w < 7; ++w) {
        CHECK(dim_at(0, w) == even_expect[w]);
        CHECK(dim_at(1, w) == odd_expect[w]);
    }
    for (const auto& b : blocks) {
        CHECK(b.stable);
        for (const auto& rep : b.basis) CHECK(schouten(pc, v, rep).is_zero());
        CHECK(static_cast<long>(b.basis.size()) == b.dimension);
    }

    // the class u survives: it is closed but not a coboundary
    CHECK(schouten(pc, v, u).is_zero());
    CHECK(!is_coboundary(pc, v, u, 6).has_value());
    CHECK(is_coboundary(pc, v, QPoly(pc.full), 4).has_value());
}

static PolyCtx heis_ctx() {
    return make_poly_ctx({{"x", 0}, {"y", 0}, {"z", 0}}, {}, 0, TMode::none, 0, true);
}

TEST_CASE("heisenberg background is flat only with its curving term") {
    auto pc = heis_ctx();
    auto z = TPoly::variable(pc.full, "z");
    auto dx = TPoly::variable(pc.full, "dx");
    auto dy = TPoly::variable(pc.full, "dy");
    auto dz = TPoly::variable(pc.full, "dz");
    auto t = TPoly::constant(pc.full, RatFunc::t());

    auto B = z * dx * dy + t * z;
    CHECK(is_flat(pc, B));

    // a nonzero p13-type deformation never stays Maurer-Cartan over B
    auto x = TPoly::variable(pc.full, "x");
    auto mu = x * dx * dz * t;
    auto prob = make_mc_problem(pc, B, mu, 2);
    CHECK(!mc_residual(prob).is_zero());

    // over the uncurved bivector alone the same deformation is flat
    auto pi = z * dx * dy;
    auto prob2 = make_mc_problem(pc, pi, dx * dz * t, 2);
    CHECK(mc_residual(prob2).is_zero());

    // p12-type bivectors are exact, with a trivector preimage over 1/t;
    // the preimage x*dx*dy*dz has weight four
    auto p12 = x * dx * dy;
    CHECK(schouten(pc, B, p12).is_zero());
    auto pre = is_coboundary(pc, B, p12, 4);
    REQUIRE(pre.has_value());
    CHECK(schouten(pc, B, *pre) == p12);

    // the window over the curved background reports exactness per degree
    auto blocks = cohomology_window(pc, B, 0, 1, 2);
    for (const auto& b : blocks) CHECK(b.dimension >= 0);
}

TEST_CASE("gamma matrix of a vector field") {
    auto pc = s2_ctx();
    auto x = QPoly::variable(pc.full, "x");
    auto u = QPoly::variable(pc.full, "u");
    auto v = x * x * u;  // x^2 d/de

    auto rep = gamma_check(pc, v);
    auto dux = GCPoly<Rat>::variable(rep.form_ctx, "du_x");
    CHECK(rep.gamma[1][0] == dux.scaled(Rat(2)));  // row e, column x
    CHECK(rep.gamma[0][0].is_zero());
    CHECK(rep.gamma[0][1].is_zero());
    CHECK(rep.gamma[1][1].is_zero());
    CHECK(rep.nilpotency_order == 2);
    CHECK(rep.traces_all_zero);
    REQUIRE(rep.traces.size() == 2);
    CHECK(rep.traces[0].is_zero());
    CHECK(rep.traces[1].is_zero());

    auto zero = gamma_check(pc, QPoly(pc.full));
    CHECK(zero.nilpotency_order == 1);
    CHECK(zero.traces_all_zero);

    // not a vector field: dual degree two
    CHECK_THROWS_AS(gamma_check(pc, u * QPoly::variable(pc.full, "dx")),
                    std::invalid_argument);
}

TEST_CASE("polyvector json round-trip keeps the dual marker") {
    auto pc = gauge_ctx();
    auto p = parse_qpoly(pc.full, "-u*t + 1/4*u^3*t^2");
    Json j = polyvector_to_json(pc, p);
    CHECK(j["n_base"] == 2);
    auto [pc2, q] = polyvector_from_json<Rat>(j);
    CHECK(pc2.nbase == 2);
    CHECK(q == p);
    CHECK(polyvector_to_json(pc2, q).dump() == j.dump());
}
