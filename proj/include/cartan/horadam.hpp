#pragma once

/**
 * @file horadam.hpp
 * @brief Horadam sequences H_n = p H_{n-1} + q H_{n-2}, H_0 = a, H_1 = b.
 *
 * Terms are arbitrary-precision integers. Only nonnegative indices exist;
 * extending backwards would need division by q.
 */

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/exact_arith.hpp"

namespace cartan {

struct HoradamParams {
    std::int64_t p = 1;
    std::int64_t q = 1;
    std::int64_t a = 0;  // H_0
    std::int64_t b = 1;  // H_1

    /// p^2 + 4q
    std::int64_t discriminant() const { return p * p + 4 * q; }

    friend bool operator==(const HoradamParams&, const HoradamParams&) = default;
};

struct Preset {
    std::string_view name;
    HoradamParams params;
};

/**
 * The six classical specializations, plus "pell_lucas_std" (a = b = 2), the
 * conventional Pell-Lucas companion 2, 2, 6, 14, ... that some printed Binet
 * constants only agree with.
 */
inline constexpr std::array<Preset, 7> kPresets{{
    {"fibonacci", {1, 1, 0, 1}},
    {"lucas", {1, 1, 2, 1}},
    {"pell", {2, 1, 0, 1}},
    {"pell_lucas", {2, 1, 2, 1}},
    {"jacobsthal", {1, 2, 0, 1}},
    {"jacobsthal_lucas", {1, 2, 2, 1}},
    {"pell_lucas_std", {2, 1, 2, 2}},
}};

/// The six table presets, in table order (excludes pell_lucas_std).
inline constexpr std::array<std::string_view, 6> kTablePresets{
    "fibonacci", "lucas", "pell", "pell_lucas", "jacobsthal", "jacobsthal_lucas"};

inline HoradamParams preset(std::string_view name) {
    for (const auto& p : kPresets) {
        if (p.name == name) return p.params;
    }
    throw unknown_preset(std::string(name));
}

inline bool is_preset(std::string_view name) {
    for (const auto& p : kPresets) {
        if (p.name == name) return true;
    }
    return false;
}

inline void check_index(std::int64_t n) {
    if (n < 0) throw invalid_argument("negative sequence index " + std::to_string(n));
}

/// H_n by direct iteration, O(n) additions.
inline BigInt term_iter(const HoradamParams& h, std::int64_t n) {
    check_index(n);
    BigInt prev = to_bigint(h.a);
    BigInt cur = to_bigint(h.b);
    if (n == 0) return prev;
    const BigInt p = to_bigint(h.p);
    const BigInt q = to_bigint(h.q);
    BigInt next;
    for (std::int64_t k = 1; k < n; ++k) {
        next = p * cur + q * prev;
        prev.swap(cur);
        cur.swap(next);
    }
    return cur;
}

/// H_0 .. H_{count-1}.
inline std::vector<BigInt> terms_iter(const HoradamParams& h, std::size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    BigInt prev = to_bigint(h.a);
    BigInt cur = to_bigint(h.b);
    const BigInt p = to_bigint(h.p);
    const BigInt q = to_bigint(h.q);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(prev);
        BigInt next = p * cur + q * prev;
        prev.swap(cur);
        cur.swap(next);
    }
    return out;
}

namespace detail {

struct IntMat2 {
    BigInt m11, m12, m21, m22;

    IntMat2 operator*(const IntMat2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22, m21 * o.m11 + m22 * o.m21,
                m21 * o.m12 + m22 * o.m22};
    }
};

}  // namespace detail

/**
 * H_n in O(log n) big-integer matrix products.
 *
 * With the companion matrix M = [[p, q], [1, 0]], [H_{n+1}, H_n]^T = M^n [b, a]^T,
 * so H_n = (M^n)_21 b + (M^n)_22 a.
 */
inline BigInt term_fast(const HoradamParams& h, std::int64_t n) {
    check_index(n);
    detail::IntMat2 acc{1, 0, 0, 1};
    detail::IntMat2 base{to_bigint(h.p), to_bigint(h.q), 1, 0};
    auto e = static_cast<std::uint64_t>(n);
    while (e != 0) {
        if ((e & 1U) != 0) acc = acc * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    BigInt out = acc.m21 * to_bigint(h.b) + acc.m22 * to_bigint(h.a);
    return out;
}

struct CharacteristicRoots {
    std::int64_t d;
    QuadElem alpha;  // (p + t) / 2
    QuadElem beta;   // (p - t) / 2
};

/// Roots of x^2 - p x - q in Q[t]/(t^2 - d), d = p^2 + 4q.
inline CharacteristicRoots roots(const HoradamParams& h) {
    const std::int64_t d = h.discriminant();
    if (d == 0) {
        throw degenerate_discriminant("p^2 + 4q = 0 for p=" + std::to_string(h.p) +
                                      ", q=" + std::to_string(h.q));
    }
    const Rational half_p(h.p, 2);
    return {d, QuadElem(half_p, Rational(1, 2), d), QuadElem(half_p, Rational(-1, 2), d)};
}

inline std::string to_string(const HoradamParams& h) {
    return "(p=" + std::to_string(h.p) + ", q=" + std::to_string(h.q) + ", a=" + std::to_string(h.a) +
           ", b=" + std::to_string(h.b) + ")";
}

}  // namespace cartan
