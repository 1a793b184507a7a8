#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curva/matfac.hpp"
#include "curva/parse.hpp"

using namespace curva;

// The running example: rank one factorization q * uq of w = u q^2. Its
// endomorphisms are the interesting small case, with one even and one odd
// generator and u the product of the odd one with itself.
static MatrixFactorization<Rat> rank_one_example(const CtxPtr& ctx) {
    auto u = QPoly::variable(ctx, "u");
    auto q = QPoly::variable(ctx, "q");
    return make_mf<Rat>(ctx, u * q * q, {{q}}, {{u * q}});
}

static bool mat_is_zero(const PolyMat<Rat>& A) {
    for (const auto& row : A)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

TEST_CASE("construction checks both composition identities") {
    auto ctx = make_ring({"u", "q"});
    auto u = QPoly::variable(ctx, "u");
    auto q = QPoly::variable(ctx, "q");

    CHECK_NOTHROW(rank_one_example(ctx));
    // d0*d1 = uq^2 but d1*d0 would need the same, so a lopsided pair fails
    CHECK_THROWS_WITH(make_mf<Rat>(ctx, u * q, {{q}}, {{q}}),
                      doctest::Contains("(d0*d1 - w*I)[0][0]"));
    CHECK_THROWS_AS(make_mf<Rat>(ctx, u * q, {{u}, {q}}, {{q, q}}),
                    std::invalid_argument);  // off-diagonal entries survive

    auto odd_ctx = make_ctx({{"e", 1}});
    CHECK_THROWS_AS(
        make_mf<Rat>(odd_ctx, GCPoly<Rat>::zero(odd_ctx), {}, {}),
        std::invalid_argument);

    CHECK_THROWS_WITH(make_mf<Rat>(ctx, u, {{u}, {u}}, {{u}}),
                      doctest::Contains("rectangular"));
}

TEST_CASE("koszul factorization of a one term potential") {
    auto ctx = make_ring({"u", "q"});
    auto u = QPoly::variable(ctx, "u");
    auto q = QPoly::variable(ctx, "q");

    auto M = koszul_mf<Rat>(ctx, {q}, {u * q});
    auto R = rank_one_example(ctx);
    CHECK(M.w == R.w);
    CHECK(M.d0 == R.d0);
    CHECK(M.d1 == R.d1);

    CHECK_THROWS_AS(koszul_mf<Rat>(ctx, {q}, {u, q}), std::invalid_argument);
}

TEST_CASE("koszul factorization on two generators") {
    auto ctx = make_ring({"u", "q"});
    auto u = QPoly::variable(ctx, "u");
    auto q = QPoly::variable(ctx, "q");

    auto M = koszul_mf<Rat>(ctx, {u, q}, {u, q});
    CHECK(M.w == u * u + q * q);
    REQUIRE(M.rank_even() == 2);
    REQUIRE(M.rank_odd() == 2);
    CHECK(M.d0[0][0] == u);
    CHECK(M.d0[0][1] == q);
    CHECK(M.d0[1][0] == -q);
    CHECK(M.d0[1][1] == u);
    CHECK(M.d1[0][0] == u);
    CHECK(M.d1[0][1] == -q);
    CHECK(M.d1[1][0] == q);
    CHECK(M.d1[1][1] == u);
}

TEST_CASE("hom complex differential squares to zero") {
    auto ctx = make_ring({"u", "q"});
    auto u = QPoly::variable(ctx, "u");
    auto q = QPoly::variable(ctx, "q");

    // two different factorizations of the same potential
    auto M = rank_one_example(ctx);
    auto N = make_mf<Rat>(ctx, u * q * q, {{u}}, {{q * q}});
    for (const auto& H : {hom_complex(M, N), hom_complex(N, M),
                          hom_complex(M, M)}) {
        CHECK(mat_is_zero(poly_mat_mul(ctx, H.d_odd, H.d_even)));
        CHECK(mat_is_zero(poly_mat_mul(ctx, H.d_even, H.d_odd)));
    }

    auto K2 = koszul_mf<Rat>(ctx, {u, q}, {u, q});
    auto H = hom_complex(K2, K2);
    CHECK(mat_is_zero(poly_mat_mul(ctx, H.d_odd, H.d_even)));
    CHECK(mat_is_zero(poly_mat_mul(ctx, H.d_even, H.d_odd)));
}

TEST_CASE("hom cohomology wants one ring and one potential") {
    auto ctx = make_ring({"u", "q"});
    auto u = QPoly::variable(ctx, "u");

    auto M = rank_one_example(ctx);
    auto other = make_mf<Rat>(ctx, u * u, {{u}}, {{u}});
    CHECK_THROWS_WITH(hom_cohomology(M, other), doctest::Contains("potential"));

    auto ctx1 = make_ring({"u"});
    auto u1 = QPoly::variable(ctx1, "u");
    auto stranger = make_mf<Rat>(ctx1, u1 * u1, {{u1}}, {{u1}});
    CHECK_THROWS_WITH(hom_cohomology(M, stranger), doctest::Contains("ring"));
}

TEST_CASE("endomorphisms of the rank one factorization") {
    auto ctx = make_ring({"u", "q"});
    auto u = QPoly::variable(ctx, "u");
    auto q = QPoly::variable(ctx, "q");
    auto H = hom_cohomology(rank_one_example(ctx), rank_one_example(ctx));

    // each parity is free of rank one over the u line: single generator,
    // single relation q, u stays unbounded
    REQUIRE(H.even.rank == 1);
    REQUIRE(H.even.generators.size() == 1);
    CHECK(H.even.generators[0][0] == QPoly::constant(ctx, Rat(1)));
    CHECK(H.even.generators[0][1] == QPoly::constant(ctx, Rat(1)));  // identity
    REQUIRE(H.even.relations.size() == 1);
    CHECK(H.even.relations[0][0] == q);
    CHECK_FALSE(H.even.quotient.finite);
    REQUIRE(H.even.quotient.infinite_at.size() == 1);
    CHECK(H.even.quotient.infinite_at[0].first == 0);
    CHECK(H.even.quotient.infinite_at[0].second ==
          std::vector<std::string>{"u"});

    REQUIRE(H.odd.rank == 1);
    REQUIRE(H.odd.relations.size() == 1);
    CHECK(H.odd.relations[0][0] == q);
    CHECK_FALSE(H.odd.quotient.finite);

    // odd generator squares to u times the identity
    auto [pe, ce] = cohomology_product_entry(H, 1, 0, 1, 0);
    CHECK(pe == 0);
    REQUIRE(ce.size() == 1);
    CHECK(ce[0] == u);

    // identity really is a unit on both generators
    auto [p1, c1] = cohomology_product_entry(H, 0, 0, 1, 0);
    CHECK(p1 == 1);
    CHECK(c1[0] == QPoly::constant(ctx, Rat(1)));
    auto [p2, c2] = cohomology_product_entry(H, 1, 0, 0, 0);
    CHECK(p2 == 1);
    CHECK(c2[0] == QPoly::constant(ctx, Rat(1)));

    auto table = cohomology_product(H);
    CHECK(table.size() == 4);
}

TEST_CASE("the diagonal rank one factorization has torsion endomorphisms") {
    auto ctx = make_ring({"u", "q"});
    auto u = QPoly::variable(ctx, "u");
    auto q = QPoly::variable(ctx, "q");
    auto N = make_mf<Rat>(ctx, u * q * q, {{u}}, {{q * q}});
    auto H = hom_cohomology(N, N);

    REQUIRE(H.even.rank == 1);
    REQUIRE(H.even.relations.size() == 2);
    CHECK(H.even.relations[0][0] == u);
    CHECK(H.even.relations[1][0] == q * q);
    REQUIRE(H.even.quotient.finite);
    CHECK(H.even.quotient.dimension == 2);

    // the odd kernel consists of boundaries only
    CHECK(H.odd.rank == 0);
    CHECK(H.odd.quotient.finite);
    CHECK(H.odd.quotient.dimension == 0);
}

TEST_CASE("zero potential gives the free endomorphism module") {
    auto ctx = make_ring({"u", "q"});
    auto zero = QPoly::zero(ctx);
    auto M = make_mf<Rat>(ctx, zero, {{zero}}, {{zero}});
    auto H = hom_cohomology(M, M);

    CHECK(H.even.rank == 2);
    CHECK(H.even.relations.empty());
    CHECK_FALSE(H.even.quotient.finite);
    CHECK(H.odd.rank == 2);
    CHECK(H.odd.relations.empty());
}

TEST_CASE("a contractible factorization has no cohomology at all") {
    auto ctx = make_ring({"u"});
    auto one = QPoly::constant(ctx, Rat(1));
    auto M = make_mf<Rat>(ctx, one, {{one}}, {{one}});
    auto H = hom_cohomology(M, M);

    // the identity class itself dies, which is the certificate of
    // contractibility
    CHECK(H.even.rank == 0);
    CHECK(H.even.quotient.finite);
    CHECK(H.even.quotient.dimension == 0);
    CHECK(H.odd.rank == 0);
}

// Multiplies the class with the given coordinates by a generator, on the
// side requested, and returns normal formed coordinates of the result.
static std::pair<int, ModVec<Rat>> mul_by_gen(const MfCohomology<Rat>& H,
                                              int pa, const ModVec<Rat>& ca,
                                              int pb, const ModVec<Rat>& cb) {
    const auto& A = pa == 0 ? H.even : H.odd;
    const auto& B = pb == 0 ? H.even : H.odd;
    std::size_t ra = pa == 0 ? H.shape.even_rank() : H.shape.odd_rank();
    std::size_t rb = pb == 0 ? H.shape.even_rank() : H.shape.odd_rank();
    auto repA = representative(H.ctx, A, ca, ra);
    auto repB = representative(H.ctx, B, cb, rb);
    auto [pc, comp] = compose_hom(H.ctx, H.shape, pb, repB, pa, repA);
    if (pa == 1 && pb == 1)
        for (auto& x : comp) x = -x;
    const auto& target = pc == 0 ? H.even : H.odd;
    const auto& bnds = pc == 0 ? H.even_boundaries : H.odd_boundaries;
    auto coords = express_over(H.ctx, target.generators, bnds, comp);
    REQUIRE(coords.has_value());
    if (!target.relations.empty())
        *coords = mod_reduce_full(ModOrder{}, *coords, target.relations);
    return {pc, *coords};
}

static void check_associative(const MfCohomology<Rat>& H) {
    std::vector<std::pair<int, std::size_t>> gens;
    for (std::size_t i = 0; i < H.even.rank; ++i) gens.push_back({0, i});
    for (std::size_t i = 0; i < H.odd.rank; ++i) gens.push_back({1, i});
    auto unit = [&](int p, std::size_t i) {
        ModVec<Rat> c = mod_zero<Rat>(H.ctx, p == 0 ? H.even.rank : H.odd.rank);
        c[i] = QPoly::constant(H.ctx, Rat(1));
        return c;
    };
    for (const auto& [pa, ia] : gens)
        for (const auto& [pb, ib] : gens)
            for (const auto& [pc, ic] : gens) {
                auto [pab, cab] = cohomology_product_entry(H, pa, ia, pb, ib);
                auto [pl, left] = mul_by_gen(H, pab, cab, pc, unit(pc, ic));
                auto [pbc, cbc] = cohomology_product_entry(H, pb, ib, pc, ic);
                auto [pr, right] = mul_by_gen(H, pa, unit(pa, ia), pbc, cbc);
                CHECK(pl == pr);
                CHECK(left == right);
            }
}

TEST_CASE("the induced product is associative on all generator triples") {
    auto ctx = make_ring({"u", "q"});
    auto u = QPoly::variable(ctx, "u");
    auto q = QPoly::variable(ctx, "q");

    check_associative(hom_cohomology(rank_one_example(ctx), rank_one_example(ctx)));

    auto K2 = koszul_mf<Rat>(ctx, {u, q}, {u, q});
    check_associative(hom_cohomology(K2, K2));
}

TEST_CASE("weight assignments propagate from the first row") {
    auto ctx = make_ring({"u", "q"});
    auto u = QPoly::variable(ctx, "u");
    auto q = QPoly::variable(ctx, "q");

    auto M = rank_one_example(ctx);
    auto eq = equivariant_weights(M, {{"u", 2L}, {"q", -2L}});
    REQUIRE(eq.consistent);
    CHECK(eq.row_weights == std::vector<long>{0});
    CHECK(eq.col_weights == std::vector<long>{-2});

    auto K2 = koszul_mf<Rat>(ctx, {u, q}, {u, q});
    auto eq2 = equivariant_weights(K2, {{"u", 1L}, {"q", 1L}});
    REQUIRE(eq2.consistent);
    CHECK(eq2.row_weights == std::vector<long>(2, 0L));
    CHECK(eq2.col_weights == std::vector<long>(2, 1L));

    // u^2 + q^2 is not homogeneous once u and q get different weights
    CHECK_THROWS_AS(equivariant_weights(K2, {{"u", 1L}, {"q", 2L}}),
                    std::invalid_argument);
    CHECK_THROWS_WITH(equivariant_weights(M, {{"u", 1L}}),
                      doctest::Contains("misses variable q"));
}

TEST_CASE("weight conflicts come back as certificates") {
    auto ctx = make_ring({"u", "q"});
    auto u = QPoly::variable(ctx, "u");
    auto q = QPoly::variable(ctx, "q");
    auto zero = QPoly::zero(ctx);

    // a square zero pair over the zero potential with a genuine cycle clash
    auto M = make_mf<Rat>(ctx, zero, {{u, q}, {u, q}}, {{q, -q}, {-u, u}});
    auto bad = equivariant_weights(M, {{"u", 1L}, {"q", 2L}});
    CHECK_FALSE(bad.consistent);
    CHECK(bad.reason.find("d1[0][0]") != std::string::npos);
    // opposite weights cancel around every cycle, so those do work
    auto good = equivariant_weights(M, {{"u", 1L}, {"q", -1L}});
    REQUIRE(good.consistent);
    CHECK(good.row_weights == std::vector<long>(2, 0L));
    CHECK(good.col_weights == std::vector<long>{1, -1});

    auto inhom = make_mf<Rat>(ctx, zero, {{u + q}}, {{zero}});
    auto cert = equivariant_weights(inhom, {{"u", 1L}, {"q", 2L}});
    CHECK_FALSE(cert.consistent);
    CHECK(cert.reason == "d0[0][0] is inhomogeneous");
}

TEST_CASE("factorizations survive the json round trip") {
    auto ctx = make_ring({"u", "q"});
    auto M = rank_one_example(ctx);
    M.weights = {{std::vector<long>{0}, std::vector<long>{-2}}};

    auto j = mf_to_json(M);
    auto M2 = mf_from_json<Rat>(j);
    CHECK(M2.w == M.w);
    CHECK(M2.d0 == M.d0);
    CHECK(M2.d1 == M.d1);
    REQUIRE(M2.weights.has_value());
    CHECK(M2.weights->first == std::vector<long>{0});
    CHECK(M2.weights->second == std::vector<long>{-2});

    // corrupted identities do not deserialize
    j["w"] = poly_to_json(QPoly::variable(ctx, "u"));
    CHECK_THROWS_AS(mf_from_json<Rat>(j), std::invalid_argument);
}
