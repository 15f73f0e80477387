#include <doctest.h>

#include <random>

#include <extab/catalog.hpp>

#include "test_helpers.hpp"

using namespace extab;
using namespace extab::testing;

TEST_CASE("ideal_power: squares of (x,y), identity at t=1") {
    auto R = ring2();
    auto I = make_ideal(R, polys(R, {"x", "y"}));
    auto I2 = ideal_power(I, 2);
    REQUIRE(I2.gens.size() == 3);
    auto gb = buchberger(R, polys(R, {"x^2", "x*y", "y^2"}));
    for (const auto& g : I2.gens) CHECK(normal_form(R, g, gb).is_zero());
    for (const auto& s : {"x^2", "x*y", "y^2"}) CHECK(I2.contains(P(R, s)));

    auto I1 = ideal_power(I, 1);
    CHECK(I1.gens.size() == I.gens.size());
    CHECK_THROWS_AS(ideal_power(I, 0), invalid_exponent);
}

TEST_CASE("ideal_power: minors squared has six irredundant quartics") {
    auto R = ring6();
    auto I = generic_minors(R, 2, 3, 2);
    auto I2 = ideal_power(I, 2);
    CHECK(I2.gens.size() == 6);
    for (const auto& g : I2.gens) CHECK(g.degree(R) == 4);
    // equality with the naive pairwise products
    std::vector<Poly<Rationals>> prods;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) prods.push_back(poly_mul(R, I.gens[i], I.gens[j]));
    auto gb = buchberger(R, prods);
    for (const auto& g : I2.gens) CHECK(normal_form(R, g, gb).is_zero());
    for (const auto& p : prods) CHECK(I2.contains(p));
}

TEST_CASE("nested powers: I^{t+1} inside I^t, bracket inside power") {
    auto R = ring6();
    auto I = generic_minors(R, 2, 3, 2);
    auto I2 = ideal_power(I, 2);
    auto I3 = ideal_power(I, 3);
    for (const auto& g : I3.gens) CHECK(I2.contains(g));
    auto B2 = bracket_power(I, 2);
    for (const auto& g : B2.gens) CHECK(I2.contains(g));
}

TEST_CASE("bracket_power semantics") {
    auto R = ring2();
    auto I = make_ideal(R, polys(R, {"x", "y"}));
    auto B = bracket_power(I, 2);
    REQUIRE(B.gens.size() == 2);
    CHECK(poly_eq(R, B.gens[0], P(R, "x^2")));
    CHECK(poly_eq(R, B.gens[1], P(R, "y^2")));

    bool dep = false;
    auto RF2 = make_ring(PrimeField(2), {"u", "v", "w", "x", "y", "z"});
    auto IF2 = generic_minors(RF2, 2, 3, 2);
    auto BF2 = bracket_power(IF2, 2, &dep);
    CHECK(!dep); // Frobenius power over F_2
    REQUIRE(BF2.gens.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(poly_eq(RF2, BF2.gens[i], poly_mul(RF2, IF2.gens[i], IF2.gens[i])));

    auto B1 = bracket_power(IF2, 1, &dep);
    CHECK(!dep);
    CHECK(B1.gens.size() == 3);

    // non-monomial generators in characteristic zero: flagged generator-dependent
    auto RQ = ring6();
    auto IQ = generic_minors(RQ, 2, 3, 2);
    bracket_power(IQ, 2, &dep);
    CHECK(dep);
}

TEST_CASE("generic minors: displayed 2x3 convention, counts, degree one") {
    auto R = ring6();
    auto I = generic_minors(R, 2, 3, 2);
    REQUIRE(I.gens.size() == 3);
    CHECK(poly_eq(R, I.gens[0], P(R, "v*z - w*y")));
    CHECK(poly_eq(R, I.gens[1], P(R, "w*x - u*z")));
    CHECK(poly_eq(R, I.gens[2], P(R, "u*y - v*x")));

    auto R9 = make_ring(Rationals{}, {"x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33"});
    auto I9 = generic_minors(R9, 3, 3, 2);
    CHECK(I9.gens.size() == 9);
    for (const auto& g : I9.gens) CHECK(g.degree(R9) == 2);

    auto I1 = generic_minors(R, 2, 3, 1);
    CHECK(I1.gens.size() == 6);
    for (const auto& g : I1.gens) CHECK(g.degree(R) == 1);

    auto Rbad = ring2();
    CHECK_THROWS_AS(generic_minors(Rbad, 2, 3, 2), ring_mismatch);
}

TEST_CASE("minors vanish on matrices of lower rank (randomized)") {
    auto R = ring6();
    auto I = generic_minors(R, 2, 3, 2);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        // rank-1 scalar matrix: entries a_i * b_j
        long a0 = static_cast<long>(rng() % 7) - 3, a1 = static_cast<long>(rng() % 7) - 3;
        long b0 = static_cast<long>(rng() % 7) - 3, b1 = static_cast<long>(rng() % 7) - 3,
             b2 = static_cast<long>(rng() % 7) - 3;
        std::vector<mpq_class> point = {mpq_class(a0 * b0), mpq_class(a0 * b1), mpq_class(a0 * b2),
                                        mpq_class(a1 * b0), mpq_class(a1 * b1), mpq_class(a1 * b2)};
        for (const auto& g : I.gens) {
            mpq_class val = 0;
            for (const auto& tm : g.t) {
                mpq_class term = tm.c;
                for (int v = 0; v < 6; ++v)
                    for (int e = 0; e < tm.m.exp(v); ++e) term *= point[static_cast<std::size_t>(v)];
                val += term;
            }
            CHECK(val == 0);
        }
    }
}

TEST_CASE("catalog: entries, metadata, heights from Hilbert series") {
    auto segre = example_catalog_q("segre_2x3");
    CHECK(segre.ring.nvars == 6);
    CHECK(segre.ideal.gens.size() == 3);
    CHECK(segre.ideal.meta.height == 2);
    CHECK(segre.ideal.meta.dim_x == 3);
    CHECK(segre.ideal.meta.sing_dim == -1);
    CHECK(segre.ideal.height_from_hilbert() == 2);

    auto thick = example_catalog_q("thickening_J_2x3");
    CHECK(thick.ideal.gens.size() == 3);
    CHECK(thick.ideal.gens[0].degree(thick.ring) == 4);
    CHECK(thick.ideal.height_from_hilbert() == 2);

    auto lci = example_catalog_q("lci_P1_thickening");
    CHECK(lci.ring.nvars == 5);
    CHECK(lci.ideal.meta.height == 3);
    CHECK(lci.ideal.height_from_hilbert() == 3);
    CHECK(lci.ideal.gens.size() == 8);

    auto cone = example_catalog_q("cone_2x3");
    CHECK(cone.ring.nvars == 7);
    CHECK(cone.ideal.height_from_hilbert() == 2);

    CHECK_THROWS_AS(example_catalog_q("no_such_example"), unknown_example);
}

TEST_CASE("catalog: quadric cone Segre product has height 4 in 8 variables") {
    auto entry = example_catalog_q("quadric_cone_segre");
    CHECK(entry.ring.nvars == 8);
    CHECK(entry.ideal.meta.height == 4);
    CHECK(entry.ideal.height_from_hilbert() == 4);
    // the plain Segre minors of the 4x2 matrix (z_ij) must lie in the ideal
    auto& R = entry.ring;
    auto z = [&](int i, int j) { return poly_var(R, 2 * i + j); };
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k) {
            auto minor = poly_sub(R, poly_mul(R, z(i, 0), z(k, 1)), poly_mul(R, z(i, 1), z(k, 0)));
            CHECK(entry.ideal.contains(minor));
        }
    // and the pulled-back quadric z10*z11 - z20*z31
    auto q = poly_sub(R, poly_mul(R, z(1, 0), z(1, 1)), poly_mul(R, z(2, 0), z(3, 1)));
    CHECK(entry.ideal.contains(q));
}

TEST_CASE("catalog over a prime field") {
    auto entry = example_catalog<PrimeField>("segre_2x3", PrimeField(2));
    CHECK(entry.ring.field.p == 2);
    CHECK(entry.ideal.gens.size() == 3);
    CHECK(entry.ideal.height_from_hilbert() == 2);
}
