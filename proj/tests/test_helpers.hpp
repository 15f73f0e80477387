#pragma once

#include <string>
#include <vector>

#include <extab/groebner.hpp>
#include <extab/parse.hpp>

namespace extab::testing {

inline Ring<Rationals> ring6() {
    return make_ring(Rationals{}, {"u", "v", "w", "x", "y", "z"});
}

inline Ring<Rationals> ring2() {
    return make_ring(Rationals{}, {"x", "y"});
}

template <class F>
Poly<F> P(const Ring<F>& R, const std::string& s) {
    return parse_poly(R, s);
}

template <class F>
std::vector<Poly<F>> polys(const Ring<F>& R, const std::vector<std::string>& ss) {
    std::vector<Poly<F>> out;
    for (const auto& s : ss) out.push_back(parse_poly(R, s));
    return out;
}

} // namespace extab::testing
