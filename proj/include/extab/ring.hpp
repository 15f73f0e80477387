#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace extab {

// Standard-graded polynomial ring R = F[x_0,...,x_n]; every variable has
// degree one. Internal elimination rings may carry weights so that graph
// ideals of graded ring maps stay homogeneous; such rings never leak out of
// kernel computations.
template <class F>
struct Ring {
    F field;
    int nvars = 0;
    std::vector<std::string> names;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<int> weights; // empty = all ones (standard grading)

    Ring() = default;
    Ring(F f, std::vector<std::string> var_names, MonomialOrder ord = MonomialOrder::grevlex())
        : field(std::move(f)), nvars(static_cast<int>(var_names.size())), names(std::move(var_names)), order(ord) {
        if (nvars <= 0 || nvars > kMaxVars)
            throw invalid_input("Ring: variable count must be in [1, " + std::to_string(kMaxVars) + "]");
    }

    bool standard_graded() const { return weights.empty(); }

    int degree(const Monomial& m) const {
        if (weights.empty()) return m.degree();
        long d = 0;
        for (int i = 0; i < nvars; ++i) d += static_cast<long>(m.exp(i)) * weights[static_cast<std::size_t>(i)];
        return static_cast<int>(d);
    }

    int cmp(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b, order, weights); }
    bool gt(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars; ++i)
            if (names[static_cast<std::size_t>(i)] == name) return i;
        return -1;
    }

    std::string mono_string(const Monomial& m) const {
        if (m.is_one()) return "1";
        std::string s;
        for (int i = 0; i < nvars; ++i) {
            int p = m.exp(i);
            if (p == 0) continue;
            if (!s.empty()) s += "*";
            s += names[static_cast<std::size_t>(i)];
            if (p > 1) s += "^" + std::to_string(p);
        }
        return s;
    }

    bool compatible(const Ring& o) const {
        return nvars == o.nvars && names == o.names && order == o.order && weights == o.weights &&
               field.characteristic() == o.field.characteristic();
    }

    std::string describe() const {
        std::string s = field.name() + "[";
        for (int i = 0; i < nvars; ++i) {
            if (i) s += ",";
            s += names[static_cast<std::size_t>(i)];
        }
        s += "]/" + order.to_string();
        return s;
    }
};

template <class F>
Ring<F> make_ring(F field, const std::vector<std::string>& names,
                  MonomialOrder ord = MonomialOrder::grevlex()) {
    return Ring<F>(std::move(field), names, ord);
}

// dim_F R_d for a polynomial ring in v variables: C(d+v-1, v-1).
inline long component_dim(int d, int v) {
    if (d < 0) return 0;
    // C(d+v-1, v-1)
    long num = 1;
    for (int i = 1; i <= v - 1; ++i) {
        num = num * (d + i) / i; // exact at each step (product of i consecutive integers)
    }
    return num;
}

inline long binomial_ll(long m, int k) {
    if (k < 0 || m < k) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

} // namespace extab
