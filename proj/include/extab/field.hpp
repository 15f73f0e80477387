#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace extab {

// Exact coefficient fields. A field object is a lightweight context passed
// alongside elements; Rationals is stateless, PrimeField carries its modulus.
// All arithmetic is exact; there is no floating point anywhere in the engine.

struct Rationals {
    using Elem = mpq_class;

    static constexpr bool is_prime_field = false;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }

    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw invalid_input("division by zero in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }

    void add_assign(Elem& a, const Elem& b) const { a += b; }
    void sub_assign(Elem& a, const Elem& b) const { a -= b; }
    void mul_assign(Elem& a, const Elem& b) const { a *= b; }

    unsigned long characteristic() const { return 0; }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    Elem parse(const std::string& s) const {
        Elem r(s);
        r.canonicalize();
        return r;
    }
    std::string name() const { return "Q"; }
};

struct PrimeField {
    using Elem = std::uint64_t;

    static constexpr bool is_prime_field = true;

    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (!is_prime(prime)) throw invalid_input("PrimeField modulus must be prime: " + std::to_string(prime));
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const {
        long m = v % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        return static_cast<Elem>(m);
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw invalid_input("division by zero in F_" + std::to_string(p));
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt; nt = tmp;
            tmp = r - q * nr;
            r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    void add_assign(Elem& a, const Elem& b) const { a = add(a, b); }
    void sub_assign(Elem& a, const Elem& b) const { a = sub(a, b); }
    void mul_assign(Elem& a, const Elem& b) const { a = mul(a, b); }

    unsigned long characteristic() const { return static_cast<unsigned long>(p); }

    std::string to_string(const Elem& a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const {
        mpq_class q(s);
        q.canonicalize();
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class num = q.get_num() % pz, den = q.get_den() % pz;
        if (num < 0) num += pz;
        Elem n = static_cast<Elem>(num.get_ui());
        Elem d = static_cast<Elem>(den.get_ui());
        return div(n, d);
    }
    std::string name() const { return "F" + std::to_string(p); }
};

} // namespace extab
