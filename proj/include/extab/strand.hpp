#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "free_module.hpp"
#include "linalg.hpp"

namespace extab {

// Index for the ordered basis of a graded component of a free module,
// supporting (slot, monomial) -> position lookups.
template <class F>
struct ComponentBasis {
    std::vector<std::pair<int, Monomial>> elems;
    std::unordered_map<std::uint64_t, int> index; // hash((slot, mono)) -> position

    static std::uint64_t key(int slot, const Monomial& m) {
        return mono_hash(m) * 1000003ull + static_cast<std::uint64_t>(slot);
    }

    ComponentBasis() = default;
    ComponentBasis(const Ring<F>& R, const FreeModule& M, int degree) {
        elems = graded_component_basis(R, M, degree);
        index.reserve(elems.size() * 2);
        for (std::size_t i = 0; i < elems.size(); ++i)
            index.emplace(key(elems[i].first, elems[i].second), static_cast<int>(i));
    }

    int size() const { return static_cast<int>(elems.size()); }
    int find(int slot, const Monomial& m) const {
        auto it = index.find(key(slot, m));
        return it == index.end() ? -1 : it->second;
    }
};

// The degree-d strand of a graded map of free modules, as an exact matrix
// between the ordered component bases. Rows are stored sparsely.
template <class F>
struct Strand {
    ComponentBasis<F> source, target;
    std::vector<SparseRow<F>> rows; // target-indexed; entries are (source col, value)

    int nrows() const { return target.size(); }
    int ncols() const { return source.size(); }
};

template <class F>
Strand<F> strand_matrix(const Ring<F>& R, const ModuleMap<F>& M, int degree) {
    Strand<F> S;
    S.source = ComponentBasis<F>(R, M.source, degree);
    S.target = ComponentBasis<F>(R, M.target, degree);
    S.rows.resize(static_cast<std::size_t>(S.target.size()));
    for (int col = 0; col < S.source.size(); ++col) {
        const auto& [gen, mono] = S.source.elems[static_cast<std::size_t>(col)];
        for (int r = 0; r < M.rows(); ++r) {
            const Poly<F>& entry = M.entry(r, gen);
            for (const auto& tm : entry.t) {
                Monomial prod = mono_mul(tm.m, mono);
                int row = S.target.find(r, prod);
                require(row >= 0, "strand_matrix: image term outside target component (map not graded?)");
                S.rows[static_cast<std::size_t>(row)].e.emplace_back(col, tm.c);
            }
        }
    }
    for (auto& row : S.rows)
        std::sort(row.e.begin(), row.e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return S;
}

template <class F>
int strand_rank(const Ring<F>& R, const ModuleMap<F>& M, int degree) {
    Strand<F> S = strand_matrix(R, M, degree);
    return sparse_rank(R.field, std::move(S.rows));
}

// Dense copy of a strand (oracle-sized problems only).
template <class F>
DenseMat<F> strand_dense(const F& k, const Strand<F>& S) {
    DenseMat<F> D(k, S.nrows(), S.ncols());
    for (int r = 0; r < S.nrows(); ++r)
        for (const auto& [c, v] : S.rows[static_cast<std::size_t>(r)].e)
            D.at(r, c) = k.add(D.at(r, c), v);
    return D;
}

// Coefficient column of a module element inside a component basis.
template <class F>
std::vector<typename F::Elem> component_vector(const Ring<F>& R, const ComponentBasis<F>& B,
                                               const ModElem<F>& v) {
    std::vector<typename F::Elem> out(static_cast<std::size_t>(B.size()), R.field.zero());
    for (const auto& tm : v.t) {
        int row = B.find(static_cast<int>(tm.slot), tm.m);
        require(row >= 0, "component_vector: element outside component");
        out[static_cast<std::size_t>(row)] = tm.c;
    }
    return out;
}

} // namespace extab
