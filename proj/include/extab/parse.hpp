#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace extab {

// Text syntax for polynomials: `coeff*mono +/- ...`, `^` for powers,
// e.g. "v*z - w*y" or "3*u^2*v - 1/2*w".
template <class F>
Poly<F> parse_poly(const Ring<F>& R, const std::string& src) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i; };
    auto fail = [&](const std::string& msg) -> parse_error { return parse_error(msg + " in polynomial '" + src + "'", i); };

    std::vector<Term<F>> terms;
    skip_ws();
    if (i == src.size()) throw fail("empty polynomial");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == src.size()) {
            if (first) throw fail("empty polynomial");
            break;
        }
        int sign = 1;
        if (src[i] == '+' || src[i] == '-') {
            if (src[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            throw fail("expected '+' or '-' between terms");
        }
        skip_ws();
        // one term: '*'-separated factors
        typename F::Elem coeff = sign < 0 ? R.field.neg(R.field.one()) : R.field.one();
        Monomial mono = Monomial::one(R.nvars);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i >= src.size()) break;
            char c = src[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
                std::string num = src.substr(start, i - start);
                skip_ws();
                if (i < src.size() && src[i] == '/') {
                    ++i;
                    skip_ws();
                    std::size_t ds = i;
                    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
                    if (ds == i) throw fail("expected denominator after '/'");
                    num += "/" + src.substr(ds, i - ds);
                }
                coeff = R.field.mul(coeff, R.field.parse(num));
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = i;
                while (i < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                    ++i;
                std::string name = src.substr(start, i - start);
                int vi = R.var_index(name);
                if (vi < 0) throw fail("unknown variable '" + name + "'");
                int power = 1;
                skip_ws();
                if (i < src.size() && src[i] == '^') {
                    ++i;
                    skip_ws();
                    std::size_t ps = i;
                    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
                    if (ps == i) throw fail("expected exponent after '^'");
                    power = std::stoi(src.substr(ps, i - ps));
                }
                mono = mono_mul(mono, Monomial::var(R.nvars, vi, power));
                saw_factor = true;
            } else {
                throw fail(std::string("unexpected character '") + c + "'");
            }
            skip_ws();
            if (i < src.size() && src[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw fail("expected a term");
        terms.push_back({mono, coeff});
        first = false;
    }
    return poly_collect(R, std::move(terms));
}

template <class F>
Poly<F> parse_poly_homogeneous(const Ring<F>& R, const std::string& src) {
    Poly<F> p = parse_poly(R, src);
    if (!p.is_homogeneous(R))
        throw not_homogeneous("inhomogeneous polynomial where homogeneity is required: " + src);
    return p;
}

} // namespace extab
