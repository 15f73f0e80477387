#pragma once

#include <stdexcept>
#include <string>

namespace extab {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown by monomial quotient when the divisor does not divide.
struct not_divisible : error {
    explicit not_divisible(const std::string& msg) : error(msg) {}
};

// Operands built over different rings (variable count, field, order).
struct ring_mismatch : error {
    explicit ring_mismatch(const std::string& msg) : error(msg) {}
};

// Homogeneous input required.
struct not_homogeneous : error {
    explicit not_homogeneous(const std::string& msg) : error(msg) {}
};

// Ring map images of unequal degrees cannot be graded.
struct not_gradable : error {
    explicit not_gradable(const std::string& msg) : error(msg) {}
};

struct invalid_exponent : error {
    explicit invalid_exponent(const std::string& msg) : error(msg) {}
};

struct unknown_example : error {
    explicit unknown_example(const std::string& msg) : error(msg) {}
};

// Ideal containment prerequisite for chain-map lifting failed.
struct not_nested : error {
    explicit not_nested(const std::string& msg) : error(msg) {}
};

struct invalid_input : error {
    explicit invalid_input(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Resource budget exhausted; partial results may have been flushed.
struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& msg) : error(msg) {}
};

// An internal invariant failed; never silent.
struct invariant_violation : error {
    explicit invariant_violation(const std::string& msg) : error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invariant_violation(msg);
}

} // namespace extab
