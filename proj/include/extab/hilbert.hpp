#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "groebner.hpp"

namespace extab {

// Integer Laurent polynomial in z, sparse.
using ZPoly = std::map<int, mpz_class>;

inline void zpoly_add(ZPoly& a, const ZPoly& b, const mpz_class& scale = 1, int shift = 0) {
    for (const auto& [d, c] : b) {
        mpz_class& slot = a[d + shift];
        slot += c * scale;
        if (slot == 0) a.erase(d + shift);
    }
}

inline bool zpoly_eq(const ZPoly& a, const ZPoly& b) { return a == b; }

inline std::string zpoly_string(const ZPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : p) {
        std::string cs = c.get_str();
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (d == 0) s += cs;
        else {
            if (cs != "1") s += cs + "*";
            s += d == 1 ? "z" : "z^" + std::to_string(d);
        }
    }
    return s;
}

namespace detail {

inline mpz_class binom_mpz(long m, int k) {
    if (k < 0 || m < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return r;
}

// Hilbert numerator of R/(monomial ideal), denominator (1-z)^nvars.
// Pivot recursion: N(I) = N(I + (x)) + z^w(x) * N(I : x).
template <class F>
ZPoly monomial_quotient_numerator(const Ring<F>& R, std::vector<Monomial> gens) {
    // minimalize the generating set
    std::vector<Monomial> min;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (mono_divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)) redundant = true;
        }
        if (!redundant) min.push_back(gens[i]);
    }
    gens = std::move(min);

    if (gens.empty()) return {{0, 1}};
    for (const auto& g : gens)
        if (g.is_one()) return {}; // unit ideal, quotient is zero

    // pairwise coprime: Koszul-type product
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!mono_coprime(gens[i], gens[j])) coprime = false;
    if (coprime) {
        ZPoly acc{{0, 1}};
        for (const auto& g : gens) {
            ZPoly next;
            int d = R.degree(g);
            for (const auto& [e, c] : acc) {
                next[e] += c;
                next[e + d] -= c;
            }
            for (auto it = next.begin(); it != next.end();) {
                if (it->second == 0) it = next.erase(it);
                else ++it;
            }
            acc = std::move(next);
        }
        return acc;
    }

    // pick the most frequently used variable as pivot
    std::vector<int> freq(static_cast<std::size_t>(R.nvars), 0);
    for (const auto& g : gens)
        for (int v = 0; v < R.nvars; ++v)
            if (g.exp(v) > 0) ++freq[static_cast<std::size_t>(v)];
    int pivot = 0;
    for (int v = 1; v < R.nvars; ++v)
        if (freq[static_cast<std::size_t>(v)] > freq[static_cast<std::size_t>(pivot)]) pivot = v;

    // I + (x_pivot)
    std::vector<Monomial> plus;
    plus.push_back(Monomial::var(R.nvars, pivot));
    for (const auto& g : gens)
        if (g.exp(pivot) == 0) plus.push_back(g);
    // I : x_pivot
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
        if (g.exp(pivot) == 0) {
            colon.push_back(g);
        } else {
            std::vector<int> e(static_cast<std::size_t>(R.nvars));
            for (int v = 0; v < R.nvars; ++v) e[static_cast<std::size_t>(v)] = g.exp(v);
            e[static_cast<std::size_t>(pivot)] -= 1;
            colon.push_back(Monomial::from_exponents(e));
        }
    }
    ZPoly a = monomial_quotient_numerator(R, std::move(plus));
    ZPoly b = monomial_quotient_numerator(R, std::move(colon));
    int w = R.weights.empty() ? 1 : R.weights[static_cast<std::size_t>(pivot)];
    zpoly_add(a, b, 1, w);
    return a;
}

} // namespace detail

// Rational-function form num(z)/(1-z)^denom_pow with integer Laurent
// numerator; exact coefficient extraction at every degree.
struct HilbertSeries {
    ZPoly num;
    int denom_pow = 0;

    mpz_class coefficient(long d) const {
        mpz_class r = 0;
        for (const auto& [i, c] : num) {
            long e = d - i;
            if (e < 0) continue;
            r += c * detail::binom_mpz(e + denom_pow - 1, denom_pow - 1);
        }
        return r;
    }

    // Cancel (1-z) factors: returns {reduced numerator, reduced denominator power}.
    HilbertSeries reduced() const {
        ZPoly n = num;
        int pow = denom_pow;
        while (pow > 0 && !n.empty()) {
            // numerator divisible by (1-z) iff it vanishes at z=1
            mpz_class at1 = 0;
            for (const auto& [d, c] : n) at1 += c;
            if (at1 != 0) break;
            // divide by (1-z): if n = sum a_d z^d, quotient q satisfies
            // q_d = sum_{i <= d} a_i (since 1/(1-z) expands as 1+z+z^2+...)
            ZPoly q;
            mpz_class run = 0;
            int lo = n.begin()->first, hi = n.rbegin()->first;
            for (int d = lo; d <= hi; ++d) {
                auto it = n.find(d);
                if (it != n.end()) run += it->second;
                if (run != 0 && d < hi) q[d] = run;
            }
            n = std::move(q);
            --pow;
        }
        return HilbertSeries{std::move(n), pow};
    }

    // Krull dimension of the module with this series over a ring whose
    // series denominator is (1-z)^nvars.
    int dimension() const { return reduced().denom_pow; }

    std::string to_string() const {
        return "(" + zpoly_string(num) + ") / (1-z)^" + std::to_string(denom_pow);
    }

    bool operator==(const HilbertSeries& o) const {
        // compare as rational functions via cross-cancellation
        HilbertSeries a = reduced(), b = o.reduced();
        return a.denom_pow == b.denom_pow && zpoly_eq(a.num, b.num);
    }
};

// Hilbert series of R/(leads of B) = R/I for a Groebner basis B of I
// (Macaulay: the quotient by the lead-term ideal has the same Hilbert function).
template <class F>
HilbertSeries hilbert_series_quotient(const Ring<F>& R, const GroebnerBasis<F>& B) {
    require(B.ambient.rank() == 1, "hilbert_series_quotient: ideal case expects rank-1 ambient");
    std::vector<Monomial> leads;
    for (const auto& g : B.gens) leads.push_back(g.lead().m);
    return HilbertSeries{detail::monomial_quotient_numerator(R, std::move(leads)), R.nvars};
}

// Hilbert series of coker(relations) in a free module with the given twists:
// per-slot monomial quotients shifted by the twists.
template <class F>
HilbertSeries hilbert_series_coker(const Ring<F>& R, const FreeModule& M,
                                   const GroebnerBasis<F>& rel_gb) {
    ZPoly total;
    for (int l = 0; l < M.rank(); ++l) {
        std::vector<Monomial> leads;
        for (const auto& g : rel_gb.gens)
            if (static_cast<int>(g.lead().slot) == l) leads.push_back(g.lead().m);
        ZPoly slot = detail::monomial_quotient_numerator(R, std::move(leads));
        zpoly_add(total, slot, 1, M.twist(l));
    }
    return HilbertSeries{std::move(total), R.nvars};
}

} // namespace extab
