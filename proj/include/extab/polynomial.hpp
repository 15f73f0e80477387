#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "field.hpp"
#include "ring.hpp"

namespace extab {

template <class F>
struct Term {
    Monomial m;
    typename F::Elem c;
};

// Sparse polynomial: terms strictly decreasing in the ring's order, no zero
// coefficients. Immutable by convention once built; arithmetic returns fresh
// values.
template <class F>
struct Poly {
    std::vector<Term<F>> t;

    bool is_zero() const { return t.empty(); }
    std::size_t size() const { return t.size(); }
    const Term<F>& lead() const { return t.front(); }

    int degree(const Ring<F>& R) const {
        if (t.empty()) return -1;
        int d = 0;
        for (const auto& tm : t) d = std::max(d, R.degree(tm.m));
        return d;
    }

    bool is_homogeneous(const Ring<F>& R) const {
        if (t.empty()) return true;
        int d = R.degree(t.front().m);
        for (const auto& tm : t)
            if (R.degree(tm.m) != d) return false;
        return true;
    }
};

template <class F>
Poly<F> poly_zero() {
    return Poly<F>{};
}

template <class F>
Poly<F> poly_term(const Ring<F>& R, const Monomial& m, const typename F::Elem& c) {
    Poly<F> p;
    if (!R.field.is_zero(c)) p.t.push_back({m, c});
    return p;
}

template <class F>
Poly<F> poly_const(const Ring<F>& R, const typename F::Elem& c) {
    return poly_term(R, Monomial::one(R.nvars), c);
}

template <class F>
Poly<F> poly_var(const Ring<F>& R, int i, int power = 1) {
    return poly_term(R, Monomial::var(R.nvars, i, power), R.field.one());
}

// Sort + combine an unsorted term list into canonical form.
template <class F>
Poly<F> poly_collect(const Ring<F>& R, std::vector<Term<F>> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) { return R.cmp(a.m, b.m) > 0; });
    Poly<F> p;
    p.t.reserve(terms.size());
    for (auto& tm : terms) {
        if (!p.t.empty() && p.t.back().m == tm.m) {
            R.field.add_assign(p.t.back().c, tm.c);
            if (R.field.is_zero(p.t.back().c)) p.t.pop_back();
        } else if (!R.field.is_zero(tm.c)) {
            p.t.push_back(std::move(tm));
        }
    }
    return p;
}

// r = a + s*b where s is a scalar (s may be one). Single merge pass.
template <class F>
Poly<F> poly_add_scaled(const Ring<F>& R, const Poly<F>& a, const Poly<F>& b,
                        const typename F::Elem& s) {
    Poly<F> r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = R.cmp(a.t[i].m, b.t[j].m);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            auto v = R.field.mul(s, b.t[j].c);
            if (!R.field.is_zero(v)) r.t.push_back({b.t[j].m, std::move(v)});
            ++j;
        } else {
            auto v = R.field.add(a.t[i].c, R.field.mul(s, b.t[j].c));
            if (!R.field.is_zero(v)) r.t.push_back({a.t[i].m, std::move(v)});
            ++i; ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) {
        auto v = R.field.mul(s, b.t[j].c);
        if (!R.field.is_zero(v)) r.t.push_back({b.t[j].m, std::move(v)});
    }
    return r;
}

template <class F>
Poly<F> poly_add(const Ring<F>& R, const Poly<F>& a, const Poly<F>& b) {
    return poly_add_scaled(R, a, b, R.field.one());
}

template <class F>
Poly<F> poly_sub(const Ring<F>& R, const Poly<F>& a, const Poly<F>& b) {
    return poly_add_scaled(R, a, b, R.field.neg(R.field.one()));
}

template <class F>
Poly<F> poly_neg(const Ring<F>& R, const Poly<F>& a) {
    Poly<F> r = a;
    for (auto& tm : r.t) tm.c = R.field.neg(tm.c);
    return r;
}

template <class F>
Poly<F> poly_scale(const Ring<F>& R, const Poly<F>& a, const typename F::Elem& s) {
    if (R.field.is_zero(s)) return {};
    Poly<F> r = a;
    for (auto& tm : r.t) R.field.mul_assign(tm.c, s);
    return r;
}

// c*m*a; order is multiplicative, so term order is preserved.
template <class F>
Poly<F> poly_mul_term(const Ring<F>& R, const Poly<F>& a, const Monomial& m,
                      const typename F::Elem& c) {
    if (R.field.is_zero(c)) return {};
    Poly<F> r;
    r.t.reserve(a.t.size());
    for (const auto& tm : a.t) r.t.push_back({mono_mul(tm.m, m), R.field.mul(tm.c, c)});
    return r;
}

template <class F>
Poly<F> poly_mul(const Ring<F>& R, const Poly<F>& a, const Poly<F>& b) {
    const Poly<F>& small = a.t.size() <= b.t.size() ? a : b;
    const Poly<F>& big = a.t.size() <= b.t.size() ? b : a;
    Poly<F> acc;
    for (const auto& tm : small.t)
        acc = poly_add(R, acc, poly_mul_term(R, big, tm.m, tm.c));
    return acc;
}

template <class F>
bool poly_eq(const Ring<F>& R, const Poly<F>& a, const Poly<F>& b) {
    if (a.t.size() != b.t.size()) return false;
    for (std::size_t i = 0; i < a.t.size(); ++i)
        if (!(a.t[i].m == b.t[i].m) || !R.field.eq(a.t[i].c, b.t[i].c)) return false;
    return true;
}

// Scale so the leading coefficient is one.
template <class F>
Poly<F> poly_monic(const Ring<F>& R, const Poly<F>& a) {
    if (a.is_zero() || R.field.is_one(a.lead().c)) return a;
    return poly_scale(R, a, R.field.inv(a.lead().c));
}

// Internal normalization used to control coefficient growth during division:
// over Q, strip to integer-primitive form with positive leading coefficient;
// over F_p, make monic. Rescaling by a unit never changes ideal membership.
template <class F>
void poly_normalize_scale(const Ring<F>& R, Poly<F>& a) {
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
std::string poly_string(const Ring<F>& R, const Poly<F>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& tm : p.t) {
        std::string cs = R.field.to_string(tm.c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        bool unit_coeff = (cs == "1");
        if (tm.m.is_one()) {
            s += cs;
        } else if (unit_coeff) {
            s += R.mono_string(tm.m);
        } else {
            s += cs + "*" + R.mono_string(tm.m);
        }
    }
    return s;
}

} // namespace extab
