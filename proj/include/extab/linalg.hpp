#pragma once

#include <algorithm>
#include <vector>

#include "field.hpp"

namespace extab {

// Exact dense matrix over a field; row-major. Desk-scale Gaussian elimination,
// no pivots by magnitude (entries are exact), first nonzero wins.
template <class F>
struct DenseMat {
    int nrows = 0, ncols = 0;
    std::vector<typename F::Elem> a;

    DenseMat() = default;
    DenseMat(const F& k, int r, int c) : nrows(r), ncols(c), a(static_cast<std::size_t>(r) * c, k.zero()) {}

    typename F::Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * ncols + c]; }
    const typename F::Elem& at(int r, int c) const { return a[static_cast<std::size_t>(r) * ncols + c]; }
};

template <class F>
int dense_rank(const F& k, DenseMat<F> M) {
    int rank = 0;
    for (int c = 0; c < M.ncols && rank < M.nrows; ++c) {
        int piv = -1;
        for (int r = rank; r < M.nrows; ++r)
            if (!k.is_zero(M.at(r, c))) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = c; j < M.ncols; ++j) std::swap(M.at(piv, j), M.at(rank, j));
        auto inv = k.inv(M.at(rank, c));
        for (int r = rank + 1; r < M.nrows; ++r) {
            if (k.is_zero(M.at(r, c))) continue;
            auto f = k.mul(M.at(r, c), inv);
            for (int j = c; j < M.ncols; ++j)
                M.at(r, j) = k.sub(M.at(r, j), k.mul(f, M.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

// Basis of the right nullspace {x : Mx = 0}, as columns.
template <class F>
std::vector<std::vector<typename F::Elem>> dense_nullspace(const F& k, DenseMat<F> M) {
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < M.ncols && rank < M.nrows; ++c) {
        int piv = -1;
        for (int r = rank; r < M.nrows; ++r)
            if (!k.is_zero(M.at(r, c))) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < M.ncols; ++j) std::swap(M.at(piv, j), M.at(rank, j));
        auto inv = k.inv(M.at(rank, c));
        for (int j = 0; j < M.ncols; ++j) M.at(rank, j) = k.mul(M.at(rank, j), inv);
        for (int r = 0; r < M.nrows; ++r) {
            if (r == rank || k.is_zero(M.at(r, c))) continue;
            auto f = M.at(r, c);
            for (int j = 0; j < M.ncols; ++j)
                M.at(r, j) = k.sub(M.at(r, j), k.mul(f, M.at(rank, j)));
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(M.ncols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<typename F::Elem>> basis;
    for (int c = 0; c < M.ncols; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<typename F::Elem> v(static_cast<std::size_t>(M.ncols), k.zero());
        v[static_cast<std::size_t>(c)] = k.one();
        for (int r = 0; r < rank; ++r)
            v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
                k.neg(M.at(r, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Sparse exact rank. Rows are sorted (col, value) lists; elimination picks,
// among rows with the lowest leading column, one with fewest entries. Over Q
// the update is multiply-through followed by content stripping, keeping all
// intermediate values integral when the input is integral.
template <class F>
struct SparseRow {
    std::vector<std::pair<int, typename F::Elem>> e;
};

template <class F>
void sparse_row_normalize(const F& k, SparseRow<F>& r) {
    if constexpr (F::is_prime_field) {
        (void)k;
    } else {
        if (r.e.empty()) return;
        mpz_class den_lcm = 1;
        for (const auto& [c, v] : r.e) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
        mpz_class num_gcd = 0;
        for (const auto& [c, v] : r.e) {
            mpz_class n = v.get_num() * (den_lcm / v.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
        if (sgn(r.e.front().second) < 0) num_gcd = -num_gcd;
        mpq_class s(den_lcm, num_gcd);
        s.canonicalize();
        if (s != 1)
            for (auto& [c, v] : r.e) v *= s;
    }
}

template <class F>
int sparse_rank(const F& k, std::vector<SparseRow<F>> rows) {
    for (auto& r : rows) sparse_row_normalize(k, r);
    int rank = 0;
    while (true) {
        int best = -1;
        int best_col = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].e.empty()) continue;
            int c = rows[i].e.front().first;
            if (best < 0 || c < best_col ||
                (c == best_col && rows[i].e.size() < rows[static_cast<std::size_t>(best)].e.size())) {
                best = static_cast<int>(i);
                best_col = c;
            }
        }
        if (best < 0) break;
        ++rank;
        SparseRow<F> piv = std::move(rows[static_cast<std::size_t>(best)]);
        rows[static_cast<std::size_t>(best)].e.clear();
        const auto pc = piv.e.front().first;
        const auto pv = piv.e.front().second;
        for (auto& r : rows) {
            if (r.e.empty() || r.e.front().first != pc) continue;
            // r := pv * r - rv * piv  (then strip content over Q)
            const auto rv = r.e.front().second;
            SparseRow<F> out;
            out.e.reserve(r.e.size() + piv.e.size());
            std::size_t i = 1, j = 1; // leading entries cancel by construction
            const auto& re = r.e;
            const auto& pe = piv.e;
            while (i < re.size() && j < pe.size()) {
                if (re[i].first < pe[j].first) {
                    out.e.emplace_back(re[i].first, k.mul(pv, re[i].second));
                    ++i;
                } else if (re[i].first > pe[j].first) {
                    out.e.emplace_back(pe[j].first, k.neg(k.mul(rv, pe[j].second)));
                    ++j;
                } else {
                    auto v = k.sub(k.mul(pv, re[i].second), k.mul(rv, pe[j].second));
                    if (!k.is_zero(v)) out.e.emplace_back(re[i].first, std::move(v));
                    ++i; ++j;
                }
            }
            for (; i < re.size(); ++i) out.e.emplace_back(re[i].first, k.mul(pv, re[i].second));
            for (; j < pe.size(); ++j) out.e.emplace_back(pe[j].first, k.neg(k.mul(rv, pe[j].second)));
            sparse_row_normalize(k, out);
            r = std::move(out);
        }
    }
    return rank;
}

} // namespace extab
