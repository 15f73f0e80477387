#pragma once

#include <string>
#include <vector>

#include "ideal.hpp"
#include "parse.hpp"
#include "syzygy.hpp"

namespace extab {

// Named catalog of the worked examples: determinantal Segre embeddings, a
// non-lci thickening, a projective cone, an lci thickening of a line, and
// the Segre product of a quadric cone with a line (built by elimination).
template <class F>
struct CatalogEntry {
    std::string name;
    Ring<F> ring;
    GradedIdeal<F> ideal;
};

inline std::vector<std::string> catalog_names() {
    return {"segre_2x3", "thickening_J_2x3", "segre_3x3",
            "cone_2x3", "lci_P1_thickening", "quadric_cone_segre"};
}

template <class F>
CatalogEntry<F> example_catalog(const std::string& name, F field) {
    if (name == "segre_2x3") {
        // P^1 x P^2 in P^5: 2x2 minors of the generic 2x3 matrix
        Ring<F> R(field, {"u", "v", "w", "x", "y", "z"});
        GradedIdeal<F> I = generic_minors(R, 2, 3, 2);
        I.meta = IdealMeta{2, 3, -1, 1};
        return {name, R, std::move(I)};
    }
    if (name == "thickening_J_2x3") {
        // J = (Δ1^2, Δ2, Δ3): same radical as the minors, not lci
        Ring<F> R(field, {"u", "v", "w", "x", "y", "z"});
        GradedIdeal<F> M = generic_minors(R, 2, 3, 2);
        std::vector<Poly<F>> gens;
        gens.push_back(poly_mul(R, M.gens[0], M.gens[0]));
        gens.push_back(M.gens[1]);
        gens.push_back(M.gens[2]);
        GradedIdeal<F> J = make_ideal(R, std::move(gens), IdealMeta{2, 3, 3, {}});
        return {name, R, std::move(J)};
    }
    if (name == "segre_3x3") {
        // P^2 x P^2 in P^8: 2x2 minors of the generic 3x3 matrix
        Ring<F> R(field, {"x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33"});
        GradedIdeal<F> I = generic_minors(R, 3, 3, 2);
        I.meta = IdealMeta{4, 4, -1, {}};
        return {name, R, std::move(I)};
    }
    if (name == "cone_2x3") {
        // projective cone over P^1 x P^2 in P^6: the same minors, one extra variable
        Ring<F> R(field, {"u", "v", "w", "x", "y", "z", "s"});
        Ring<F> R6(field, {"u", "v", "w", "x", "y", "z"});
        GradedIdeal<F> M = generic_minors(R6, 2, 3, 2);
        std::vector<Poly<F>> gens;
        for (const auto& g : M.gens) {
            std::vector<Term<F>> terms;
            for (const auto& tm : g.t) {
                std::vector<int> e(7, 0);
                for (int v = 0; v < 6; ++v) e[static_cast<std::size_t>(v)] = tm.m.exp(v);
                terms.push_back({Monomial::from_exponents(e), tm.c});
            }
            gens.push_back(poly_collect(R, std::move(terms)));
        }
        GradedIdeal<F> I = make_ideal(R, std::move(gens), IdealMeta{2, 4, 0, {}});
        return {name, R, std::move(I)};
    }
    if (name == "lci_P1_thickening") {
        // J = I^2 + (uy - vx, vy - wx) with I = (u,v,w): lci thickening of P^1
        Ring<F> R(field, {"x", "y", "u", "v", "w"});
        GradedIdeal<F> I = make_ideal(R, {parse_poly(R, "u"), parse_poly(R, "v"), parse_poly(R, "w")});
        GradedIdeal<F> I2 = ideal_power(I, 2);
        std::vector<Poly<F>> gens = I2.gens;
        gens.push_back(parse_poly(R, "u*y - v*x"));
        gens.push_back(parse_poly(R, "v*y - w*x"));
        GradedIdeal<F> J = make_ideal(R, std::move(gens), IdealMeta{3, 1, 1, {}});
        return {name, R, std::move(J)};
    }
    if (name == "quadric_cone_segre") {
        // Segre product F[x0..x3]/(x1^2 - x2 x3) # F[y0, y1], presented in the
        // 8 variables z_ij = x_i y_j; the defining ideal is the elimination
        // kernel, with the quadric as a target relation. Height 4.
        Ring<F> R(field, {"z00", "z01", "z10", "z11", "z20", "z21", "z30", "z31"});
        Ring<F> T(field, {"x0", "x1", "x2", "x3", "y0", "y1"});
        std::vector<Poly<F>> images;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j)
                images.push_back(poly_mul(T, poly_var(T, i), poly_var(T, 4 + j)));
        std::vector<Poly<F>> rel = {parse_poly(T, "x1^2 - x2*x3")};
        std::vector<Poly<F>> gens = kernel_of_ring_map(R, T, images, rel);
        GradedIdeal<F> I = make_ideal(R, std::move(gens), IdealMeta{4, 3, 1, 1});
        return {name, R, std::move(I)};
    }
    throw unknown_example("unknown example '" + name + "'");
}

inline CatalogEntry<Rationals> example_catalog_q(const std::string& name) {
    return example_catalog<Rationals>(name, Rationals{});
}

} // namespace extab
