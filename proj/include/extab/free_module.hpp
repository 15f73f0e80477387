#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace extab {

// Graded free module ⊕_l R(-a_l), recorded by its twist list a_l.
struct FreeModule {
    std::vector<int> twists;

    FreeModule() = default;
    explicit FreeModule(std::vector<int> tw) : twists(std::move(tw)) {}
    static FreeModule rank1(int twist = 0) { return FreeModule({twist}); }

    int rank() const { return static_cast<int>(twists.size()); }
    int twist(int slot) const { return twists[static_cast<std::size_t>(slot)]; }

    bool operator==(const FreeModule& o) const { return twists == o.twists; }
};

template <class F>
struct MTerm {
    std::uint32_t slot;
    Monomial m;
    typename F::Elem c;
};

// Position-over-term order on module monomials: positions compared first,
// ascending index (slot 0 highest), ties by the ring order.
template <class F>
inline int mterm_cmp(const Ring<F>& R, std::uint32_t slot_a, const Monomial& ma,
                     std::uint32_t slot_b, const Monomial& mb) {
    if (slot_a != slot_b) return slot_a < slot_b ? 1 : -1;
    return R.cmp(ma, mb);
}

// Element of a free module: terms strictly decreasing under position-over-term.
template <class F>
struct ModElem {
    std::vector<MTerm<F>> t;

    bool is_zero() const { return t.empty(); }
    std::size_t size() const { return t.size(); }
    const MTerm<F>& lead() const { return t.front(); }

    int degree(const Ring<F>& R, const FreeModule& M) const {
        if (t.empty()) return -1;
        int d = R.degree(t.front().m) + M.twist(static_cast<int>(t.front().slot));
        return d;
    }

    bool is_homogeneous(const Ring<F>& R, const FreeModule& M) const {
        if (t.empty()) return true;
        int d = R.degree(t.front().m) + M.twist(static_cast<int>(t.front().slot));
        for (const auto& tm : t)
            if (R.degree(tm.m) + M.twist(static_cast<int>(tm.slot)) != d) return false;
        return true;
    }
};

template <class F>
ModElem<F> mod_collect(const Ring<F>& R, std::vector<MTerm<F>> terms) {
    std::sort(terms.begin(), terms.end(), [&](const MTerm<F>& a, const MTerm<F>& b) {
        return mterm_cmp(R, a.slot, a.m, b.slot, b.m) > 0;
    });
    ModElem<F> v;
    v.t.reserve(terms.size());
    for (auto& tm : terms) {
        if (!v.t.empty() && v.t.back().slot == tm.slot && v.t.back().m == tm.m) {
            R.field.add_assign(v.t.back().c, tm.c);
            if (R.field.is_zero(v.t.back().c)) v.t.pop_back();
        } else if (!R.field.is_zero(tm.c)) {
            v.t.push_back(std::move(tm));
        }
    }
    return v;
}

// r = a + s*(m * b)
template <class F>
ModElem<F> mod_add_scaled_mul(const Ring<F>& R, const ModElem<F>& a, const typename F::Elem& s,
                              const Monomial& m, const ModElem<F>& b) {
    ModElem<F> r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    const bool m_is_one = m.is_one();
    auto bmono = [&](std::size_t jj) { return m_is_one ? b.t[jj].m : mono_mul(b.t[jj].m, m); };
    while (i < a.t.size() && j < b.t.size()) {
        Monomial bm = bmono(j);
        int c = mterm_cmp(R, a.t[i].slot, a.t[i].m, b.t[j].slot, bm);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            auto v = R.field.mul(s, b.t[j].c);
            if (!R.field.is_zero(v)) r.t.push_back({b.t[j].slot, bm, std::move(v)});
            ++j;
        } else {
            auto v = R.field.add(a.t[i].c, R.field.mul(s, b.t[j].c));
            if (!R.field.is_zero(v)) r.t.push_back({a.t[i].slot, a.t[i].m, std::move(v)});
            ++i; ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) {
        auto v = R.field.mul(s, b.t[j].c);
        if (!R.field.is_zero(v)) r.t.push_back({b.t[j].slot, bmono(j), std::move(v)});
    }
    return r;
}

template <class F>
ModElem<F> mod_add(const Ring<F>& R, const ModElem<F>& a, const ModElem<F>& b) {
    return mod_add_scaled_mul(R, a, R.field.one(), Monomial::one(R.nvars), b);
}

template <class F>
ModElem<F> mod_scale(const Ring<F>& R, const ModElem<F>& a, const typename F::Elem& s) {
    if (R.field.is_zero(s)) return {};
    ModElem<F> r = a;
    for (auto& tm : r.t) R.field.mul_assign(tm.c, s);
    return r;
}

template <class F>
ModElem<F> mod_mul_term(const Ring<F>& R, const ModElem<F>& a, const Monomial& m,
                        const typename F::Elem& c) {
    if (R.field.is_zero(c)) return {};
    ModElem<F> r;
    r.t.reserve(a.t.size());
    for (const auto& tm : a.t) r.t.push_back({tm.slot, mono_mul(tm.m, m), R.field.mul(tm.c, c)});
    return r;
}

template <class F>
bool mod_eq(const Ring<F>& R, const ModElem<F>& a, const ModElem<F>& b) {
    if (a.t.size() != b.t.size()) return false;
    for (std::size_t i = 0; i < a.t.size(); ++i)
        if (a.t[i].slot != b.t[i].slot || !(a.t[i].m == b.t[i].m) ||
            !R.field.eq(a.t[i].c, b.t[i].c))
            return false;
    return true;
}

template <class F>
void mod_normalize_scale(const Ring<F>& R, ModElem<F>& a) {
    if (a.is_zero()) return;
    if constexpr (F::is_prime_field) {
        if (!R.field.is_one(a.lead().c)) {
            auto s = R.field.inv(a.lead().c);
            for (auto& tm : a.t) R.field.mul_assign(tm.c, s);
        }
    } else {
        mpz_class den_lcm = 1;
        for (const auto& tm : a.t) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), tm.c.get_den_mpz_t());
        mpz_class num_gcd = 0;
        for (const auto& tm : a.t) {
            mpz_class n = tm.c.get_num() * (den_lcm / tm.c.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
        if (sgn(a.lead().c) < 0) num_gcd = -num_gcd;
        mpq_class s(den_lcm, num_gcd);
        s.canonicalize();
        if (s != 1)
            for (auto& tm : a.t) tm.c *= s;
    }
}

template <class F>
ModElem<F> mod_monic(const Ring<F>& R, const ModElem<F>& a) {
    if (a.is_zero() || R.field.is_one(a.lead().c)) return a;
    return mod_scale(R, a, R.field.inv(a.lead().c));
}

template <class F>
ModElem<F> poly_to_mod(const Poly<F>& p, std::uint32_t slot = 0) {
    ModElem<F> v;
    v.t.reserve(p.t.size());
    for (const auto& tm : p.t) v.t.push_back({slot, tm.m, tm.c});
    return v;
}

template <class F>
Poly<F> mod_to_poly(const ModElem<F>& v) {
    Poly<F> p;
    p.t.reserve(v.t.size());
    for (const auto& tm : v.t) {
        require(tm.slot == 0, "mod_to_poly: element not in rank-1 module");
        p.t.push_back({tm.m, tm.c});
    }
    return p;
}

// Degree-zero graded map of free modules, stored column-major: every entry
// (r, c) is homogeneous of degree source.twist(c) - target.twist(r) or zero.
template <class F>
struct ModuleMap {
    FreeModule source, target;
    std::vector<std::vector<Poly<F>>> cols; // cols[c][r]

    int rows() const { return target.rank(); }
    int ncols() const { return source.rank(); }

    const Poly<F>& entry(int r, int c) const {
        return cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    }

    bool check_graded(const Ring<F>& R) const {
        for (int c = 0; c < ncols(); ++c)
            for (int r = 0; r < rows(); ++r) {
                const Poly<F>& p = entry(r, c);
                if (p.is_zero()) continue;
                if (!p.is_homogeneous(R)) return false;
                if (p.degree(R) != source.twist(c) - target.twist(r)) return false;
            }
        return true;
    }
};

template <class F>
ModuleMap<F> make_map(const Ring<F>& R, FreeModule source, FreeModule target,
                      std::vector<std::vector<Poly<F>>> cols) {
    (void)R;
    ModuleMap<F> m{std::move(source), std::move(target), std::move(cols)};
    require(static_cast<int>(m.cols.size()) == m.source.rank(), "ModuleMap: column count mismatch");
    for (const auto& col : m.cols)
        require(static_cast<int>(col.size()) == m.target.rank(), "ModuleMap: row count mismatch");
    return m;
}

template <class F>
ModElem<F> map_column(const ModuleMap<F>& M, int c) {
    std::vector<MTerm<F>> terms;
    for (int r = 0; r < M.rows(); ++r)
        for (const auto& tm : M.entry(r, c).t)
            terms.push_back({static_cast<std::uint32_t>(r), tm.m, tm.c});
    // columns of a map are already slot-sorted with sorted polys per slot
    ModElem<F> v;
    v.t = std::move(terms);
    return v;
}

template <class F>
std::vector<Poly<F>> mod_to_column(const ModElem<F>& v, int rank) {
    std::vector<Poly<F>> col(static_cast<std::size_t>(rank));
    for (const auto& tm : v.t)
        col[tm.slot].t.push_back({tm.m, tm.c});
    return col;
}

template <class F>
ModuleMap<F> columns_to_map(const Ring<F>& R, const FreeModule& target,
                            const std::vector<ModElem<F>>& cols) {
    std::vector<int> src_twists;
    std::vector<std::vector<Poly<F>>> matrix;
    for (const auto& v : cols) {
        require(v.is_homogeneous(R, target), "columns_to_map: inhomogeneous column");
        src_twists.push_back(v.degree(R, target));
        matrix.push_back(mod_to_column(v, target.rank()));
    }
    return make_map(R, FreeModule(std::move(src_twists)), target, std::move(matrix));
}

// Apply a map to a module element: v in source, result in target.
template <class F>
ModElem<F> map_apply(const Ring<F>& R, const ModuleMap<F>& M, const ModElem<F>& v) {
    ModElem<F> acc;
    for (const auto& tm : v.t) {
        ModElem<F> col = map_column(M, static_cast<int>(tm.slot));
        acc = mod_add_scaled_mul(R, acc, tm.c, tm.m, col);
    }
    return acc;
}

// Compose: (A ∘ B) where B: E -> F and A: F -> G.
template <class F>
ModuleMap<F> map_compose(const Ring<F>& R, const ModuleMap<F>& A, const ModuleMap<F>& B) {
    require(A.source == B.target, "map_compose: middle modules differ");
    std::vector<std::vector<Poly<F>>> cols;
    for (int c = 0; c < B.ncols(); ++c) {
        ModElem<F> img = map_apply(R, A, map_column(B, c));
        cols.push_back(mod_to_column(img, A.target.rank()));
    }
    return make_map(R, B.source, A.target, std::move(cols));
}

// All monomials of total degree d in R.nvars variables, sorted descending in
// the ring order; deterministic.
template <class F>
std::vector<Monomial> monomials_of_degree(const Ring<F>& R, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<int> exps(static_cast<std::size_t>(R.nvars), 0);
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == R.nvars - 1) {
            exps[static_cast<std::size_t>(var)] = rem;
            out.push_back(Monomial::from_exponents(exps));
            return;
        }
        for (int k = rem; k >= 0; --k) {
            exps[static_cast<std::size_t>(var)] = k;
            self(self, var + 1, rem - k);
        }
        exps[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return R.cmp(a, b) > 0; });
    return out;
}

// Ordered basis of the degree-d component of a free module: slot-major, then
// monomial order. Size is Σ_l C(d - a_l + n, n) with the usual zero convention.
template <class F>
std::vector<std::pair<int, Monomial>> graded_component_basis(const Ring<F>& R, const FreeModule& M,
                                                             int d) {
    std::vector<std::pair<int, Monomial>> basis;
    for (int l = 0; l < M.rank(); ++l) {
        int internal = d - M.twist(l);
        if (internal < 0) continue;
        for (const auto& m : monomials_of_degree(R, internal)) basis.emplace_back(l, m);
    }
    return basis;
}

inline long graded_component_dim(const FreeModule& M, int d, int nvars) {
    long total = 0;
    for (int l = 0; l < M.rank(); ++l) total += component_dim(d - M.twist(l), nvars);
    return total;
}

} // namespace extab
