#include <doctest.h>

#include <algorithm>
#include <random>

#include <extab/catalog.hpp>

#include "test_helpers.hpp"

using namespace extab;
using namespace extab::testing;

namespace {

std::vector<int> ranks(const Resolution<Rationals>& res) {
    std::vector<int> r = {res.f0.rank()};
    for (int i = 1; i <= res.length(); ++i) r.push_back(res.module(i).rank());
    return r;
}

std::vector<int> sorted_twists(const Resolution<Rationals>& res, int i) {
    auto t = res.module(i).twists;
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

TEST_CASE("Koszul complex of (x, y): ranks 1,2,1") {
    auto R = ring2();
    auto res = free_resolution(R, polys(R, {"x", "y"}));
    CHECK(ranks(res) == std::vector<int>{1, 2, 1});
    CHECK(res.minimal);
    CHECK(sorted_twists(res, 1) == std::vector<int>{1, 1});
    CHECK(sorted_twists(res, 2) == std::vector<int>{2});
}

TEST_CASE("Hilbert-Burch resolution of the 2x3 minors: ranks 1,3,2") {
    auto R = ring6();
    auto I = generic_minors(R, 2, 3, 2);
    auto res = free_resolution(R, I.gens);
    CHECK(ranks(res) == std::vector<int>{1, 3, 2});
    CHECK(sorted_twists(res, 1) == std::vector<int>{2, 2, 2});
    CHECK(sorted_twists(res, 2) == std::vector<int>{3, 3});
    CHECK(res.minimal);
}

TEST_CASE("displayed thickening J = (Δ1^2, Δ2, Δ3): ranks 1,3,3,1") {
    auto entry = example_catalog_q("thickening_J_2x3");
    auto res = free_resolution(entry.ring, entry.ideal.gens);
    CHECK(ranks(res) == std::vector<int>{1, 3, 3, 1});
    CHECK(sorted_twists(res, 1) == std::vector<int>{2, 2, 4});
    CHECK(sorted_twists(res, 2) == std::vector<int>{4, 5, 5});
    CHECK(sorted_twists(res, 3) == std::vector<int>{6});
}

TEST_CASE("minimalize: already-minimal complex unchanged; identity block cancels") {
    auto R = ring2();
    auto res = free_resolution(R, polys(R, {"x", "y"}));
    auto before = ranks(res);
    auto min = minimalize(R, res);
    CHECK(ranks(min) == before);

    // pad the presentation with a duplicate generator: resolve WITHOUT the
    // per-level pruning by building the presentation map directly
    std::vector<std::vector<Poly<Rationals>>> cols = {
        {P(R, "x")}, {P(R, "y")}, {P(R, "x")}};
    auto pres = make_map(R, FreeModule({1, 1, 1}), FreeModule::rank1(0), cols);
    auto res2 = free_resolution(R, pres);
    // pruning inside free_resolution already removes the duplicate
    CHECK(ranks(res2) == std::vector<int>{1, 2, 1});

    // hand-build a non-minimal complex: R(-1)^2 -> R ⊕ R(-1), with an
    // identity entry; minimalize must cancel the pair
    std::vector<std::vector<Poly<Rationals>>> mcols = {
        {P(R, "x"), poly_const(R, mpq_class(1))},
        {P(R, "y"), poly_zero<Rationals>()}};
    auto m = make_map(R, FreeModule({1, 1}), FreeModule({0, 1}), mcols);
    Resolution<Rationals> fake;
    fake.ring = R;
    fake.f0 = m.target;
    fake.maps.push_back(m);
    fake.lifts.push_back(nullptr);
    auto minimized = minimalize(R, fake);
    CHECK(minimized.f0.rank() == 1);
    REQUIRE(minimized.length() == 1);
    CHECK(minimized.module(1).rank() == 1);
}

TEST_CASE("Betti numbers invariant under shuffling and duplicating generators") {
    auto R = ring6();
    auto I = generic_minors(R, 2, 3, 2);
    auto res = free_resolution(R, I.gens);
    auto betti0 = res.betti().entries;

    std::vector<Poly<Rationals>> shuffled = {I.gens[2], I.gens[0], I.gens[1], I.gens[0],
                                             poly_add(R, I.gens[0], I.gens[1])};
    auto res2 = free_resolution(R, shuffled);
    CHECK(res2.betti().entries == betti0);
}

TEST_CASE("Hilbert series: minors quotient, two independent paths agree") {
    auto R = ring6();
    auto I = generic_minors(R, 2, 3, 2);

    // dim (R/I)_2 = 18, full ring degree 2 = 21
    CHECK(I.hilbert_function(2) == 18);
    CHECK(component_dim(2, 6) == 21);
    CHECK(I.hilbert_function(-1) == 0);

    // series (1+2z)/(1-z)^4, i.e. coefficients (d+1)*C(d+2,2)
    auto hs = I.hilbert_series();
    auto red = hs.reduced();
    CHECK(red.denom_pow == 4);
    ZPoly expect_num{{0, 1}, {1, 2}};
    CHECK(zpoly_eq(red.num, expect_num));
    for (int d = 0; d <= 6; ++d)
        CHECK(hs.coefficient(d) == mpz_class(d + 1) * ((d + 2) * (d + 1) / 2));

    // second path: from the Betti numbers of the minimal resolution
    auto res = free_resolution(R, I.gens);
    CHECK(hs == res.hilbert_series_from_betti());

    // Euler characteristic identity degreewise on a window
    for (int d = 0; d <= 6; ++d) {
        mpz_class chi = 0;
        for (int i = 0; i <= res.length(); ++i) {
            mpz_class dim = 0;
            for (int tw : res.module(i).twists) dim += detail::binom_mpz(d - tw + 5, 5);
            chi += (i % 2 == 0) ? dim : -dim;
        }
        CHECK(chi == I.hilbert_function(d));
    }
}

TEST_CASE("two-path Hilbert agreement on catalog entries") {
    for (const auto& name : {"thickening_J_2x3", "lci_P1_thickening"}) {
        auto entry = example_catalog_q(name);
        auto res = free_resolution(entry.ring, entry.ideal.gens);
        CHECK(entry.ideal.hilbert_series() == res.hilbert_series_from_betti());
    }
}

TEST_CASE("powers of the minors ideal: projective dimension 3") {
    auto R = ring6();
    auto I = generic_minors(R, 2, 3, 2);
    for (int t : {2, 4}) {
        auto It = ideal_power(I, t);
        auto res = free_resolution(R, It.gens);
        CHECK(res.length() == 3);
        CHECK(res.minimal);
        CHECK(It.hilbert_series() == res.hilbert_series_from_betti());
    }
}

TEST_CASE("resolution over a prime field: Frobenius power is Cohen-Macaulay") {
    auto R = make_ring(PrimeField(2), {"u", "v", "w", "x", "y", "z"});
    auto I = generic_minors(R, 2, 3, 2);
    auto B = bracket_power(I, 2);
    auto res = free_resolution(R, B.gens);
    // R/(Δ1^2, Δ2^2, Δ3^2) over F_2 has depth 4: projective dimension 2
    CHECK(res.length() == 2);
    CHECK(res.module(1).rank() == 3);
    CHECK(res.module(2).rank() == 2);
}
