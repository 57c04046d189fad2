#pragma once

/**
 * @file errors.hpp
 * @brief Exception types raised by the library.
 *
 * Every error the library reports derives from cartan::error so callers
 * (the CLI in particular) can catch the whole family in one place.
 */

#include <stdexcept>
#include <string>

namespace cartan {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary operation on two quadratic-ring values with different d.
struct ring_mismatch : error {
    explicit ring_mismatch(const std::string& what) : error("ring mismatch: " + what) {}
};

struct division_by_zero : error {
    explicit division_by_zero(const std::string& what) : error("division by zero: " + what) {}
};

/// Nonzero element with zero norm (d is a perfect square).
struct not_invertible : error {
    explicit not_invertible(const std::string& what) : error("not invertible: " + what) {}
};

/// p^2 + 4q = 0; the characteristic polynomial has a repeated root.
struct degenerate_discriminant : error {
    explicit degenerate_discriminant(const std::string& what)
        : error("degenerate discriminant: " + what) {}
};

struct unknown_preset : error {
    explicit unknown_preset(const std::string& name) : error("unknown preset: " + name) {}
};

/// Exact division by an integer requested on an integer that is not a multiple.
struct requires_rational : error {
    explicit requires_rational(const std::string& what)
        : error("representation requires rational coefficients: " + what) {}
};

/// Power-series expansion of a rational function whose denominator has c0 != 1.
struct non_unit_constant : error {
    explicit non_unit_constant(const std::string& what)
        : error("denominator constant term is not 1: " + what) {}
};

struct invalid_argument : error {
    using error::error;
};

}  // namespace cartan
