#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resolution.hpp"

namespace extab {

struct IdealMeta {
    int height = -1;
    int dim_x = -1;    // dimension of X = Proj R/I
    int sing_dim = -2; // dimension of Sing X; -1 means smooth, -2 unknown
    std::optional<int> mu; // Bass multiplicity of the limit, when known
};

template <class F>
struct GradedIdeal {
    Ring<F> ring;
    std::vector<Poly<F>> gens;
    IdealMeta meta;
    mutable std::shared_ptr<GroebnerBasis<F>> cached_gb;

    const GroebnerBasis<F>& gb() const {
        if (!cached_gb) cached_gb = std::make_shared<GroebnerBasis<F>>(buchberger(ring, gens));
        return *cached_gb;
    }

    bool contains(const Poly<F>& f) const { return normal_form(ring, f, gb()).is_zero(); }

    HilbertSeries hilbert_series() const { return hilbert_series_quotient(ring, gb()); }

    // dim_F (R/I)_d
    mpz_class hilbert_function(int d) const {
        if (d < 0) return 0;
        return hilbert_series().coefficient(d);
    }

    int krull_dim() const { return hilbert_series().dimension(); }
    int height_from_hilbert() const { return ring.nvars - krull_dim(); }
};

template <class F>
GradedIdeal<F> make_ideal(const Ring<F>& R, std::vector<Poly<F>> gens, IdealMeta meta = {}) {
    for (const auto& g : gens)
        if (!g.is_homogeneous(R)) throw not_homogeneous("make_ideal: inhomogeneous generator");
    return GradedIdeal<F>{R, std::move(gens), meta, nullptr};
}

// I^t: all t-fold products of the listed generators, deduplicated via normal
// forms (minimal generators of the product ideal).
template <class F>
GradedIdeal<F> ideal_power(const GradedIdeal<F>& I, int t) {
    if (t <= 0) throw invalid_exponent("ideal_power: exponent must be >= 1");
    if (t == 1) return I;
    const Ring<F>& R = I.ring;
    // multisets of size t over the generators
    std::vector<Poly<F>> products;
    std::vector<int> pick(static_cast<std::size_t>(t), 0);
    const int n = static_cast<int>(I.gens.size());
    if (n == 0) return I;
    while (true) {
        Poly<F> prod = I.gens[static_cast<std::size_t>(pick[0])];
        for (int k = 1; k < t; ++k) prod = poly_mul(R, prod, I.gens[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])]);
        products.push_back(std::move(prod));
        int k = t - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] == n - 1) --k;
        if (k < 0) break;
        int v = ++pick[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < t; ++j) pick[static_cast<std::size_t>(j)] = v;
    }
    std::vector<ModElem<F>> cols;
    for (const auto& p : products) cols.push_back(poly_to_mod(p));
    std::vector<Poly<F>> minimal;
    for (const auto& v : min_generators(R, FreeModule::rank1(0), std::move(cols)))
        minimal.push_back(mod_to_poly(v));
    IdealMeta meta = I.meta; // same radical: height, dim X unchanged
    return GradedIdeal<F>{R, std::move(minimal), meta, nullptr};
}

// Bracket power (m_1^q, ..., m_r^q). Generator-dependent in general; the
// advertised semantics are the monomial case and Frobenius powers over F_p
// with q a power of p, where it is generator-independent. Other uses get a
// warning flag through the return value's meta-free path (callers decide).
template <class F>
GradedIdeal<F> bracket_power(const GradedIdeal<F>& I, int q, bool* generator_dependent = nullptr) {
    if (q <= 0) throw invalid_exponent("bracket_power: exponent must be >= 1");
    const Ring<F>& R = I.ring;
    bool monomial = true;
    for (const auto& g : I.gens)
        if (g.t.size() > 1) monomial = false;
    bool frobenius = false;
    if (unsigned long p = R.field.characteristic(); p > 0) {
        unsigned long qq = static_cast<unsigned long>(q);
        while (qq % p == 0) qq /= p;
        frobenius = (qq == 1);
    }
    if (generator_dependent) *generator_dependent = !(monomial || frobenius || q == 1);
    std::vector<Poly<F>> gens;
    for (const auto& g : I.gens) {
        Poly<F> pw = poly_const(R, R.field.one());
        for (int k = 0; k < q; ++k) pw = poly_mul(R, pw, g);
        gens.push_back(std::move(pw));
    }
    IdealMeta meta;
    meta.height = I.meta.height; // same radical
    meta.dim_x = I.meta.dim_x;
    return GradedIdeal<F>{R, std::move(gens), meta, nullptr};
}

// All size x size minors of the generic rows x cols matrix whose entries are
// the ring variables in row-major order. For maximal minors of a matrix with
// one extra column, signs follow the cofactor convention, Δ_i deleting
// column i with alternating sign; otherwise plain determinants.
template <class F>
GradedIdeal<F> generic_minors(const Ring<F>& R, int rows, int cols, int size) {
    if (R.nvars != rows * cols) throw ring_mismatch("generic_minors: ring needs rows*cols variables");
    if (size < 1 || size > std::min(rows, cols)) throw invalid_input("generic_minors: bad minor size");
    auto entry = [&](int i, int j) { return poly_var(R, i * cols + j); };

    // determinant of the selected rows/cols by Laplace expansion
    auto det = [&](auto&& self, const std::vector<int>& rs, const std::vector<int>& cs) -> Poly<F> {
        if (rs.size() == 1) return entry(rs[0], cs[0]);
        Poly<F> acc;
        std::vector<int> sub_rs(rs.begin() + 1, rs.end());
        for (std::size_t k = 0; k < cs.size(); ++k) {
            std::vector<int> sub_cs;
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (j != k) sub_cs.push_back(cs[j]);
            Poly<F> cof = poly_mul(R, entry(rs[0], cs[k]), self(self, sub_rs, sub_cs));
            acc = (k % 2 == 0) ? poly_add(R, acc, cof) : poly_sub(R, acc, cof);
        }
        return acc;
    };

    std::vector<Poly<F>> gens;
    std::vector<int> rsel(static_cast<std::size_t>(size)), csel(static_cast<std::size_t>(size));
    auto choose = [&](auto&& self, std::vector<int>& sel, int from, int depth, int total,
                      auto&& emit) -> void {
        if (depth == size) {
            emit();
            return;
        }
        for (int v = from; v < total; ++v) {
            sel[static_cast<std::size_t>(depth)] = v;
            self(self, sel, v + 1, depth + 1, total, emit);
        }
    };
    bool cofactor_signs = (size == rows && cols == size + 1);
    choose(choose, rsel, 0, 0, rows, [&] {
        choose(choose, csel, 0, 0, cols, [&] {
            Poly<F> d = det(det, rsel, csel);
            if (cofactor_signs) {
                // Δ_i deletes column i with alternating sign: Δ_1 = +, Δ_2 = -, ...
                int deleted = 0;
                for (int j = 0; j < cols; ++j) {
                    bool used = false;
                    for (int v : csel)
                        if (v == j) used = true;
                    if (!used) deleted = j;
                }
                if (deleted % 2 == 1) d = poly_neg(R, d);
            }
            gens.push_back(std::move(d));
        });
    });
    if (cofactor_signs) std::reverse(gens.begin(), gens.end()); // Δ_1, Δ_2, ..., by deleted column
    IdealMeta meta;
    return GradedIdeal<F>{R, std::move(gens), meta, nullptr};
}

} // namespace extab
