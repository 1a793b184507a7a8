#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curva/groebner.hpp"
#include "curva/parse.hpp"

using namespace curva;

static Mono mono(std::vector<std::int32_t> e) { return Mono{std::move(e), 0}; }

// Critical equations of W = q^2 u + t (u / (uq - 1))^d with denominators
// cleared, as an ideal over Q(t)[u, q].
static Ideal<RatFunc> cleared_critical(int d) {
    auto ctx = make_ring({"u", "q"});
    auto u = TPoly::variable(ctx, "u");
    auto q = TPoly::variable(ctx, "q");
    auto den = u * q - TPoly::constant(ctx, RatFunc::one());
    auto num = q * q * u * den.pow(d) +
               TPoly::constant(ctx, RatFunc::t()) * u.pow(d);
    return critical_ideal(num, den, d);
}

TEST_CASE("a principal ideal reduces everything to its remainder") {
    auto ctx = make_ring({"x"});
    auto x = QPoly::variable(ctx, "x");
    auto G = buchberger(make_ideal(ctx, {x.scaled(Rat(3))}));
    REQUIRE(G.basis.size() == 1);
    CHECK(G.basis[0] == x);  // monic
    CHECK(normal_form(G, x * x + x).is_zero());
    CHECK(normal_form(G, x + QPoly::constant(ctx, Rat(1))) ==
          QPoly::constant(ctx, Rat(1)));
}

TEST_CASE("quadric jacobian over Q(t) has the two-cell staircase") {
    auto ctx = make_ring({"x", "u"});
    auto I = make_ideal(ctx, {parse_tpoly(ctx, "2*x*u"), parse_tpoly(ctx, "t + x^2")});
    auto G = buchberger(I);
    REQUIRE(G.basis.size() == 2);
    CHECK(G.basis[0] == parse_tpoly(ctx, "u"));
    CHECK(G.basis[1] == parse_tpoly(ctx, "x^2 + t"));

    auto Q = quotient_dimension(G);
    REQUIRE(Q.finite);
    CHECK(Q.dimension == 2);
    REQUIRE(Q.staircase.size() == 2);
    CHECK(Q.staircase[0] == mono({0, 0}));
    CHECK(Q.staircase[1] == mono({1, 0}));
}

TEST_CASE("parabola plus cusp ideal has a three-dimensional quotient") {
    // grevlex picks x^2 as the leading monomial of y - x^2
    auto ctx = make_ring({"x", "y"});
    auto I = make_ideal(ctx, {parse_qpoly(ctx, "y - x^2"), parse_qpoly(ctx, "x^3")});
    auto Q = quotient_dimension(buchberger(I));
    REQUIRE(Q.finite);
    CHECK(Q.dimension == 3);

    // with y in front, lex eliminates y and leaves the 1, x, x^2 staircase
    auto ctx2 = make_ring({"y", "x"});
    auto I2 = make_ideal(ctx2, {parse_qpoly(ctx2, "y - x^2"), parse_qpoly(ctx2, "x^3")});
    auto Q2 = quotient_dimension(buchberger(I2, OrderSpec{MonoOrder::lex, 0}));
    REQUIRE(Q2.finite);
    CHECK(Q2.dimension == 3);
    REQUIRE(Q2.staircase.size() == 3);
    CHECK(Q2.staircase[0] == mono({0, 0}));
    CHECK(Q2.staircase[1] == mono({0, 1}));
    CHECK(Q2.staircase[2] == mono({0, 2}));
}

TEST_CASE("saturation strips the components along the divisor") {
    auto ctx = make_ring({"x", "y"});
    auto x = QPoly::variable(ctx, "x");
    auto y = QPoly::variable(ctx, "y");

    auto S1 = saturate(make_ideal(ctx, {x * y}), x);
    auto G1 = buchberger(S1);
    REQUIRE(G1.basis.size() == 1);
    CHECK(G1.basis[0] == y);

    auto S2 = saturate(make_ideal(ctx, {x * x * (x - QPoly::constant(ctx, Rat(1)))}), x);
    auto G2 = buchberger(S2);
    REQUIRE(G2.basis.size() == 1);
    CHECK(G2.basis[0] == x - QPoly::constant(ctx, Rat(1)));

    // the zero ideal is already saturated
    CHECK(saturate(make_ideal<Rat>(ctx, {}), x).gens.empty());

    // a context that already uses the auxiliary name still works
    auto cctx = make_ring({"y_sat"});
    auto z = QPoly::variable(cctx, "y_sat");
    auto S3 = saturate(make_ideal(cctx, {z * z}), z);
    auto Q3 = quotient_dimension(buchberger(S3));
    REQUIRE(Q3.finite);
    CHECK(Q3.dimension == 0);  // the unit ideal: no point survives
}

TEST_CASE("critical equations of a polynomial potential are plain partials") {
    auto ctx = make_ring({"u", "q"});
    auto I = critical_ideal(parse_qpoly(ctx, "u*q^2"), QPoly::constant(ctx, Rat(1)), 1);
    REQUIRE(I.gens.size() == 2);
    CHECK(I.gens[0] == parse_qpoly(ctx, "q^2"));
    CHECK(I.gens[1] == parse_qpoly(ctx, "2*u*q"));

    CHECK_THROWS_AS(critical_ideal(parse_qpoly(ctx, "u"), QPoly::zero(ctx), 1),
                    std::invalid_argument);
}

TEST_CASE("cleared critical equations match their closed form") {
    auto I = cleared_critical(2);
    const auto& ctx = I.ctx;
    REQUIRE(I.gens.size() == 2);
    CHECK(I.gens[0] == parse_tpoly(ctx, "q^2*(u*q-1)^3 - 2*t*u"));
    CHECK(I.gens[1] == parse_tpoly(ctx, "2*u*q*(u*q-1)^3 - 2*t*u^3"));
}

TEST_CASE("critical length and origin multiplicity, degree two") {
    auto I = cleared_critical(2);
    auto ctx = I.ctx;
    auto den = parse_tpoly(ctx, "u*q - 1");
    auto line = parse_tpoly(ctx, "u + 3*q");  // generic line through the origin

    auto total = scheme_length(I, {den});
    REQUIRE(total.finite);
    CHECK(total.dimension == 6);

    auto off_origin = scheme_length(I, {den, line});
    REQUIRE(off_origin.finite);
    CHECK(total.dimension - off_origin.dimension == 3);

    // the randomized fast path agrees and says so
    auto fast = scheme_length_specialized(I, {den});
    CHECK(fast.probabilistic);
    REQUIRE(fast.info.finite);
    CHECK(fast.info.dimension == 6);
}

TEST_CASE("critical length and origin multiplicity, degree three") {
    auto I = cleared_critical(3);
    auto ctx = I.ctx;
    auto den = parse_tpoly(ctx, "u*q - 1");
    auto line = parse_tpoly(ctx, "u + 3*q");

    auto total = scheme_length(I, {den});
    REQUIRE(total.finite);
    CHECK(total.dimension == 8);

    auto off_origin = scheme_length(I, {den, line});
    REQUIRE(off_origin.finite);
    CHECK(total.dimension - off_origin.dimension == 4);
}

TEST_CASE("quotient dimension does not depend on the order") {
    auto I = cleared_critical(2);
    auto spec = specialize_t(I, Rat(1));
    auto d1 = quotient_dimension(buchberger(spec));
    auto d2 = quotient_dimension(buchberger(spec, OrderSpec{MonoOrder::lex, 0}));
    REQUIRE(d1.finite);
    REQUIRE(d2.finite);
    CHECK(d1.dimension == d2.dimension);
}

TEST_CASE("infinite quotients name the unbounded directions") {
    auto ctx = make_ring({"u", "v"});
    auto Q0 = quotient_dimension(buchberger(make_ideal<Rat>(ctx, {})));
    CHECK(!Q0.finite);
    CHECK(Q0.no_pure_power == std::vector<std::string>{"u", "v"});

    auto Q1 = quotient_dimension(
        buchberger(make_ideal(ctx, {parse_qpoly(ctx, "u^2*v")})));
    CHECK(!Q1.finite);

    auto uctx = make_ring({"u"});
    auto Q2 = quotient_dimension(
        buchberger(make_ideal(uctx, {parse_qpoly(uctx, "u^2")})));
    REQUIRE(Q2.finite);
    CHECK(Q2.dimension == 2);
    CHECK(Q2.staircase == std::vector<Mono>{mono({0}), mono({1})});
}

TEST_CASE("normal form respects products modulo the ideal") {
    auto ctx = make_ring({"x", "u"});
    auto G = buchberger(
        make_ideal(ctx, {parse_tpoly(ctx, "2*x*u"), parse_tpoly(ctx, "t + x^2")}));
    auto f = parse_tpoly(ctx, "(x + u)^2");
    auto g = parse_tpoly(ctx, "x^3 - u");
    CHECK(normal_form(G, f * g) ==
          normal_form(G, normal_form(G, f) * normal_form(G, g)));
}

TEST_CASE("ideal construction rejects what the engine cannot chew") {
    auto odd = make_ctx({{"e", 1}});
    CHECK_THROWS_AS(make_ideal<Rat>(odd, {}), std::invalid_argument);

    auto tctx = make_ctx({{"x", 0}}, 2, TMode::poly);
    CHECK_THROWS_AS(make_ideal<Rat>(tctx, {}), std::invalid_argument);

    auto a = make_ring({"x"});
    auto b = make_ring({"y"});
    CHECK_THROWS_AS(make_ideal(a, std::vector<QPoly>{QPoly::variable(b, "y")}),
                    std::invalid_argument);
}

TEST_CASE("ideals round trip through json") {
    auto I = cleared_critical(2);
    auto j = ideal_to_json(I);
    auto back = ideal_from_json<RatFunc>(j);
    REQUIRE(back.gens.size() == I.gens.size());
    CHECK(back.gens[0] == I.gens[0]);
    CHECK(back.gens[1] == I.gens[1]);
}

TEST_CASE("specialization refuses to evaluate at a pole") {
    auto ctx = make_ring({"x"});
    auto x = TPoly::variable(ctx, "x");
    auto c = RatFunc(UPoly(Rat(1)), UPoly({Rat(-1), Rat(1)}));  // 1/(t-1)
    auto I = make_ideal(ctx, std::vector<TPoly>{x.scaled(c)});
    CHECK(specialize_t(I, Rat(5) / 7).gens.size() == 1);
    CHECK_THROWS_AS(specialize_t(I, Rat(1)), std::invalid_argument);
}
