#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace extab {

// Dense exponent vectors; desk scale keeps the variable count small
// (every worked example has at most 14 variables, counting elimination rings).
inline constexpr int kMaxVars = 16;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint8_t nvars = 0;
    std::uint16_t total = 0; // plain exponent sum, cached

    Monomial() = default;
    explicit Monomial(int n) : nvars(static_cast<std::uint8_t>(n)) {}

    static Monomial one(int n) { return Monomial(n); }

    static Monomial var(int n, int i, int power = 1) {
        Monomial m(n);
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
        m.total = static_cast<std::uint16_t>(power);
        return m;
    }

    static Monomial from_exponents(const std::vector<int>& exps) {
        if (exps.size() > kMaxVars) throw invalid_input("too many variables");
        Monomial m(static_cast<int>(exps.size()));
        int t = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0 || exps[i] > 255) throw invalid_exponent("exponent out of range");
            m.e[i] = static_cast<std::uint8_t>(exps[i]);
            t += exps[i];
        }
        m.total = static_cast<std::uint16_t>(t);
        return m;
    }

    int degree() const { return total; }
    int exp(int i) const { return e[static_cast<std::size_t>(i)]; }
    bool is_one() const { return total == 0; }

    bool operator==(const Monomial& o) const {
        if (nvars != o.nvars || total != o.total) return false;
        for (int i = 0; i < nvars; ++i)
            if (e[static_cast<std::size_t>(i)] != o.e[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars);
    int t = 0;
    for (int i = 0; i < a.nvars; ++i) {
        int s = a.e[static_cast<std::size_t>(i)] + b.e[static_cast<std::size_t>(i)];
        if (s > 255) throw invalid_exponent("monomial exponent overflow");
        r.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s);
        t += s;
    }
    r.total = static_cast<std::uint16_t>(t);
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars);
    int t = 0;
    for (int i = 0; i < a.nvars; ++i) {
        int s = std::max(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
        r.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s);
        t += s;
    }
    r.total = static_cast<std::uint16_t>(t);
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b, componentwise
    if (a.total > b.total) return false;
    for (int i = 0; i < a.nvars; ++i)
        if (a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)]) return false;
    return true;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars; ++i)
        if (a.e[static_cast<std::size_t>(i)] != 0 && b.e[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

inline Monomial mono_quotient(const Monomial& a, const Monomial& b) {
    // a / b; throws when b does not divide a
    if (!mono_divides(b, a)) throw not_divisible("monomial quotient: not divisible");
    Monomial r(a.nvars);
    int t = 0;
    for (int i = 0; i < a.nvars; ++i) {
        int s = a.e[static_cast<std::size_t>(i)] - b.e[static_cast<std::size_t>(i)];
        r.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s);
        t += s;
    }
    r.total = static_cast<std::uint16_t>(t);
    return r;
}

// ---------------------------------------------------------------------------
// Monomial orders. Total, multiplicative well-orders; GrevLex is the default
// throughout, Elimination(block) compares a leading block first (used for
// ring-map kernels), Lex is kept for completeness.

enum class OrderKind : std::uint8_t { GrevLex, Lex, Elimination };

struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int block = 0; // Elimination: size of the leading block

    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder elimination(int block_size) { return {OrderKind::Elimination, block_size}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }

    std::string to_string() const {
        switch (kind) {
            case OrderKind::GrevLex: return "grevlex";
            case OrderKind::Lex: return "lex";
            case OrderKind::Elimination: return "elim(" + std::to_string(block) + ")";
        }
        return "?";
    }
};

namespace detail {

// grevlex on the variable range [lo, hi) with the given weights.
// Returns >0 when a > b. Ties on weighted degree are broken by the last
// differing variable from the right: the smaller exponent there wins.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi,
                             const std::vector<int>& weights) {
    long da = 0, db = 0;
    if (weights.empty()) {
        for (int i = lo; i < hi; ++i) {
            da += a.e[static_cast<std::size_t>(i)];
            db += b.e[static_cast<std::size_t>(i)];
        }
    } else {
        for (int i = lo; i < hi; ++i) {
            da += static_cast<long>(a.e[static_cast<std::size_t>(i)]) * weights[static_cast<std::size_t>(i)];
            db += static_cast<long>(b.e[static_cast<std::size_t>(i)]) * weights[static_cast<std::size_t>(i)];
        }
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        int d = a.e[static_cast<std::size_t>(i)] - b.e[static_cast<std::size_t>(i)];
        if (d != 0) return d > 0 ? -1 : 1;
    }
    return 0;
}

inline int cmp_lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        int d = a.e[static_cast<std::size_t>(i)] - b.e[static_cast<std::size_t>(i)];
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

} // namespace detail

// Three-way comparison: >0 iff a > b under the order.
inline int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord,
                    const std::vector<int>& weights = {}) {
    const int n = a.nvars;
    switch (ord.kind) {
        case OrderKind::GrevLex:
            return detail::cmp_grevlex_range(a, b, 0, n, weights);
        case OrderKind::Lex:
            return detail::cmp_lex_range(a, b, 0, n);
        case OrderKind::Elimination: {
            int c = detail::cmp_grevlex_range(a, b, 0, ord.block, weights);
            if (c != 0) return c;
            return detail::cmp_grevlex_range(a, b, ord.block, n, weights);
        }
    }
    return 0;
}

inline std::uint64_t mono_hash(const Monomial& m) {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < m.nvars; ++i) {
        h ^= m.e[static_cast<std::size_t>(i)];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace extab
