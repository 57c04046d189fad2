#pragma once

/**
 * @file genfunc.hpp
 * @brief Rational generating functions num(x)/den(x) with coefficients in any
 * ring that rationals act on, and their power-series expansion.
 *
 * For a Horadam-type sequence with recurrence W_{n+2} = p W_{n+1} + q W_n,
 *
 *     sum W_n x^n = (W_0 + (W_1 - p W_0) x) / (1 - p x - q x^2).
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cartan/cartan_number.hpp"
#include "cartan/cartan_sequences.hpp"
#include "cartan/errors.hpp"
#include "cartan/exact_arith.hpp"
#include "cartan/horadam.hpp"
#include "cartan/json_io.hpp"
#include "cartan/reconcile.hpp"
#include "cartan/spinor.hpp"

namespace cartan {

/// Coefficient list indexed by power of x. Trailing zeros are always trimmed; the zero polynomial is empty.
template <class R>
class Poly {
public:
    Poly() = default;
    Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    const std::vector<R>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }
    bool empty() const { return c_.empty(); }

    /// Coefficient of x^k; `zero` when k is past the end.
    R at(std::size_t k, const R& zero) const { return k < c_.size() ? c_[k] : zero; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
struct RationalGF {
    Poly<R> num;
    Poly<Rational> den;
};

namespace detail {

template <class R>
R zero_of(const Poly<R>& p) {
    return p.empty() ? R{} : zero_like(p.coeffs().front());
}

/// Poly<Rational> times Poly<R>.
template <class R>
Poly<R> scale_mul(const Poly<Rational>& a, const Poly<R>& b) {
    if (a.empty() || b.empty()) return {};
    const R zero = zero_of(b);
    std::vector<R> out(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return Poly<R>(std::move(out));
}

template <class R>
Poly<R> poly_add(const Poly<R>& a, const Poly<R>& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const R zero = zero_of(a);
    std::vector<R> out(std::max(a.size(), b.size()), zero);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.at(k, zero) + b.at(k, zero);
    return Poly<R>(std::move(out));
}

}  // namespace detail

/// n1/d1 + n2/d2 over the common denominator d1 d2 (not reduced).
template <class R>
RationalGF<R> operator+(const RationalGF<R>& x, const RationalGF<R>& y) {
    return {detail::poly_add(detail::scale_mul(y.den, x.num), detail::scale_mul(x.den, y.num)),
            detail::scale_mul(x.den, y.den)};
}

/// First `count` series coefficients: c_n = num_n - sum_{k>=1} den_k c_{n-k}.
template <class R>
std::vector<R> series_expand(const RationalGF<R>& gf, std::size_t count) {
    if (gf.den.empty() || gf.den.coeffs().front() != Rational(1)) {
        throw non_unit_constant("denominator constant term must be 1");
    }
    const R zero = detail::zero_of(gf.num);
    std::vector<R> c;
    c.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        R v = gf.num.at(n, zero);
        for (std::size_t k = 1; k < gf.den.size() && k <= n; ++k) v -= gf.den.coeffs()[k] * c[n - k];
        c.push_back(std::move(v));
    }
    return c;
}

/// 1 - p x - q x^2
inline Poly<Rational> horadam_denominator(const HoradamParams& h) { return {Rational(1), Rational(-h.p), Rational(-h.q)}; }

/// (w0 + (w1 - p w0) x) / (1 - p x - q x^2)
template <class R>
RationalGF<R> horadam_gf(const HoradamParams& h, const R& w0, const R& w1) {
    return {Poly<R>{w0, w1 - Rational(h.p) * w0}, horadam_denominator(h)};
}

inline RationalGF<CartanNumber<Rational>> cartan_gf(const HoradamParams& h) {
    return horadam_gf(h, to_rational(cw_term(h, 0)), to_rational(cw_term(h, 1)));
}

inline RationalGF<SpinorQ> spinor_gf(const HoradamParams& h) {
    return horadam_gf(h, spinor_term(h, 0), spinor_term(h, 1));
}

// ---------------------------------------------------------------------------
// JSON and comparison helpers
// ---------------------------------------------------------------------------

template <class R>
Json to_json(const Poly<R>& p) {
    Json j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(to_json(c));
    return j;
}

template <class R>
std::vector<std::string> differing_coords(const Poly<R>& x, const Poly<R>& y, const std::string& label) {
    std::vector<std::string> out;
    const std::string prefix = label.empty() ? "" : label + ".";
    const R zero = !x.empty() ? detail::zero_of(x) : detail::zero_of(y);
    for (std::size_t k = 0; k < std::max(x.size(), y.size()); ++k) {
        const auto sub = differing_coords(x.at(k, zero), y.at(k, zero), "");
        const std::string power = prefix + "x^" + std::to_string(k);
        if (sub.size() == 1 && sub.front().empty()) {
            out.push_back(power);
            continue;
        }
        for (const auto& c : sub) out.push_back(power + "." + c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Printed generating functions
// ---------------------------------------------------------------------------

namespace detail {

template <class R>
struct PrintedGF {
    std::string name;    // entry prefix
    std::string preset;  // preset the display is read against
    Poly<Rational> den;
    R constant;
    R linear;
    std::string note;
};

inline std::vector<PrintedGF<CartanNumber<Rational>>> printed_cartan_gfs() {
    const Poly<Rational> den_p2q1{Rational(1), Rational(-2), Rational(-1)};
    const Poly<Rational> den_p1q2{Rational(1), Rational(-1), Rational(-2)};
    return {
        {"cartan_gf.pell", "pell", den_p2q1, cartan_q(0, 1, 2, 5), cartan_q(1, 1, 0, 2), ""},
        {"cartan_gf.jacobsthal", "jacobsthal", den_p2q1, cartan_q(0, 1, 1, 3), cartan_q(1, 0, 2, 2),
         "printed denominator 1-2x-x^2"},
        {"cartan_gf.pell_lucas", "pell_lucas", den_p2q1, cartan_q(2, 1, 4, 9), cartan_q(-3, 2, 1, 4),
         "printed under the name C_P"},
        {"cartan_gf.jacobsthal_lucas", "jacobsthal_lucas", den_p1q2, cartan_q(2, 1, 5, 7), cartan_q(-1, 4, 2, 10),
         "printed under the name C_J"},
    };
}

inline std::vector<PrintedGF<SpinorQ>> printed_spinor_gfs() {
    const Poly<Rational> den_p1q1{Rational(1), Rational(-1), Rational(-1)};
    const Poly<Rational> den_p2q1{Rational(1), Rational(-2), Rational(-1)};
    const Poly<Rational> den_p1q2{Rational(1), Rational(-1), Rational(-2)};
    const Rational h(1, 2);
    return {
        {"spinor_gf.pell", "pell", den_p2q1, spinor_q(0, Rational(9, 2), -h, 1), spinor_q(1, 2, 0, 0), ""},
        {"spinor_gf.pell_lucas", "pell_lucas", den_p2q1, spinor_q(2, Rational(17, 2), -h, 1),
         spinor_q(-3, 3, 0, 2), ""},
        {"spinor_gf.jacobsthal", "jacobsthal", den_p1q2, spinor_q(0, Rational(5, 2), -h, 1), spinor_q(1, 3, 1, 0),
         ""},
        {"spinor_gf.jacobsthal_lucas", "jacobsthal_lucas", den_p1q2, spinor_q(2, Rational(17, 2), Rational(3, 2), -1),
         spinor_q(-1, 7, -3, -4), ""},
        {"spinor_gf.fibonacci_header", "fibonacci", den_p1q1, spinor_q(1, 1, 0, 1), spinor_q(1, Rational(7, 2), h, 1),
         "matrix displayed in the theorem statement, read as the Fibonacci case"},
    };
}

template <class R>
void append_printed_gf(std::vector<ReconEntry>& out, const PrintedGF<R>& printed, const RationalGF<R>& computed,
                       bool expansion_ok) {
    const R zero = zero_of(computed.num);
    out.push_back(compare_entry(printed.name + ".denominator", printed.den, computed.den, printed.note));
    auto c0 = compare_entry(printed.name + ".numerator.x0", printed.constant, computed.num.at(0, zero));
    auto c1 = compare_entry(printed.name + ".numerator.x1", printed.linear, computed.num.at(1, zero));
    c0.extra["computed_expansion_matches_32_terms"] = expansion_ok;
    c1.extra["computed_expansion_matches_32_terms"] = expansion_ok;
    out.push_back(std::move(c0));
    out.push_back(std::move(c1));
}

constexpr std::size_t kExpansionCheck = 32;

inline bool cartan_expansion_ok(const HoradamParams& h) {
    const auto series = series_expand(cartan_gf(h), kExpansionCheck);
    const auto terms = cw_terms(h, kExpansionCheck);
    for (std::size_t n = 0; n < kExpansionCheck; ++n) {
        if (series[n] != to_rational(terms[n])) return false;
    }
    return true;
}

inline bool spinor_expansion_ok(const HoradamParams& h) {
    return series_expand(spinor_gf(h), kExpansionCheck) == spinor_terms(h, kExpansionCheck);
}

}  // namespace detail

/**
 * Entries for the printed Cartan and spinor generating functions (denominator
 * and both numerator coefficients each), followed by the two general
 * numerators as printed, evaluated per preset:
 *   "cartan_gf_general.*": CW_0 + (CW_1 - CW_0) x
 *   "spinor_gf_general.*": SCW_0 (1 - p x) + SCW_1
 */
inline std::vector<ReconEntry> reconcile_gf() {
    std::vector<ReconEntry> out;
    for (const auto& printed : detail::printed_cartan_gfs()) {
        const HoradamParams h = preset(printed.preset);
        detail::append_printed_gf(out, printed, cartan_gf(h), detail::cartan_expansion_ok(h));
    }
    for (const auto& printed : detail::printed_spinor_gfs()) {
        const HoradamParams h = preset(printed.preset);
        detail::append_printed_gf(out, printed, spinor_gf(h), detail::spinor_expansion_ok(h));
    }
    for (const auto name : kTablePresets) {
        const HoradamParams h = preset(name);
        const auto w0 = to_rational(cw_term(h, 0));
        const auto w1 = to_rational(cw_term(h, 1));
        const Poly<CartanNumber<Rational>> printed{w0, w1 - w0};
        out.push_back(compare_entry("cartan_gf_general." + std::string(name), printed, cartan_gf(h).num,
                                    "numerator CW_0 + x(CW_1 - CW_0)"));
    }
    for (const auto name : kTablePresets) {
        const HoradamParams h = preset(name);
        const auto s0 = spinor_term(h, 0);
        const auto s1 = spinor_term(h, 1);
        const Poly<SpinorQ> printed{s0 + s1, -(Rational(h.p) * s0)};
        out.push_back(compare_entry("spinor_gf_general." + std::string(name), printed, spinor_gf(h).num,
                                    "numerator SCW_0 (1 - p x) + SCW_1"));
    }
    return out;
}

}  // namespace cartan
