#pragma once

/**
 * @file spinor.hpp
 * @brief Two-component spinors attached to Cartan numbers.
 *
 * The transform
 *
 *     eps(s + ci i + cj j + ck k) = [ s + (cj + ck/2) i ]
 *                                   [ (cj - ck/2) + ci i ]
 *
 * is linear and injective. Conjugate and mate use C = [[0, 1], [-1, 0]]:
 *
 *     tilde(phi) = i C conj(phi),     mate(phi) = -C conj(phi),
 *
 * both of which square to -identity.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cartan/cartan_number.hpp"
#include "cartan/cartan_sequences.hpp"
#include "cartan/exact_arith.hpp"
#include "cartan/horadam.hpp"
#include "cartan/json_io.hpp"
#include "cartan/mat2.hpp"
#include "cartan/reconcile.hpp"

namespace cartan {

template <class C>
struct Spinor {
    C c1{};
    C c2{};

    Spinor operator-() const { return {-c1, -c2}; }
    Spinor& operator+=(const Spinor& o) {
        c1 += o.c1;
        c2 += o.c2;
        return *this;
    }
    Spinor& operator-=(const Spinor& o) {
        c1 -= o.c1;
        c2 -= o.c2;
        return *this;
    }
    friend Spinor operator+(Spinor x, const Spinor& y) { return x += y; }
    friend Spinor operator-(Spinor x, const Spinor& y) { return x -= y; }
    friend bool operator==(const Spinor&, const Spinor&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Spinor& s) {
        return os << "[" << s.c1 << "; " << s.c2 << "]";
    }
};

template <class T>
struct is_spinor : std::false_type {};
template <class C>
struct is_spinor<Spinor<C>> : std::true_type {};

template <class S, class C>
    requires(!is_spinor<S>::value) && requires(const S& s, const C& c) {
        { s * c } -> std::convertible_to<C>;
    }
Spinor<C> operator*(const S& s, const Spinor<C>& x) {
    return {s * x.c1, s * x.c2};
}

using SpinorQ = Spinor<ComplexRational>;
using SpinorQuad = Spinor<ComplexQuad>;

template <class C>
Spinor<C> zero_like(const Spinor<C>& x) {
    return {zero_like(x.c1), zero_like(x.c2)};
}
template <class C>
bool is_zero(const Spinor<C>& x) {
    return is_zero(x.c1) && is_zero(x.c2);
}

template <class R>
Json to_json(const Spinor<Complex<R>>& x) {
    Json j = Json::object();
    j["c1"] = to_json(x.c1);
    j["c2"] = to_json(x.c2);
    return j;
}

template <class R>
bool same_value(const Spinor<Complex<R>>& x, const Spinor<Complex<R>>& y) {
    return same_value(x.c1, y.c1) && same_value(x.c2, y.c2);
}

template <class R>
std::vector<std::string> differing_coords(const Spinor<Complex<R>>& x, const Spinor<Complex<R>>& y,
                                          const std::string& label) {
    const std::string prefix = label.empty() ? "" : label + ".";
    auto out = differing_coords(x.c1, y.c1, prefix + "c1");
    auto rest = differing_coords(x.c2, y.c2, prefix + "c2");
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

inline SpinorQ spinor_q(Rational re1, Rational im1, Rational re2, Rational im2) {
    return {{std::move(re1), std::move(im1)}, {std::move(re2), std::move(im2)}};
}

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

template <CoefficientRing R>
Spinor<Complex<R>> epsilon(const CartanNumber<R>& x) {
    const R half_k = div_int(x.ck, 2);
    return {{x.s, x.cj + half_k}, {x.cj - half_k, x.ci}};
}

inline SpinorQ epsilon(const CartanNumber<BigInt>& x) { return epsilon(to_rational(x)); }

/// i C conj(phi) = [i conj(phi2); -i conj(phi1)]
template <class R>
Spinor<Complex<R>> tilde_conj(const Spinor<Complex<R>>& phi) {
    const Complex<R> i = imag_unit_like(phi.c1);
    return {i * phi.c2.conj(), -(i * phi.c1.conj())};
}

/// -C conj(phi) = [-conj(phi2); conj(phi1)]
template <class R>
Spinor<Complex<R>> mate(const Spinor<Complex<R>>& phi) {
    return {-phi.c2.conj(), phi.c1.conj()};
}

template <class R>
Spinor<Complex<R>> complex_conj(const Spinor<Complex<R>>& phi) {
    return {phi.c1.conj(), phi.c2.conj()};
}

/**
 * [[A, -conj(C)], [C, conj(A)]] with (A, C) = eps(x). Its first column is
 * eps(x) and Q Q^dagger = (|A|^2 + |C|^2) I.
 */
template <CoefficientRing R>
Mat2<Complex<R>> q_hat(const CartanNumber<R>& x) {
    const auto phi = epsilon(x);
    return {phi.c1, -phi.c2.conj(), phi.c2, phi.c1.conj()};
}

inline Mat2<ComplexRational> q_hat(const CartanNumber<BigInt>& x) { return q_hat(to_rational(x)); }

/// Null vector (phi1^2 - phi2^2, i (phi1^2 + phi2^2), -2 phi1 phi2).
template <class R>
std::array<Complex<R>, 3> isotropic(const Spinor<Complex<R>>& phi) {
    const Complex<R> i = imag_unit_like(phi.c1);
    const Complex<R> a = phi.c1 * phi.c1;
    const Complex<R> b = phi.c2 * phi.c2;
    const Complex<R> two = one_like(phi.c1) + one_like(phi.c1);
    return {a - b, i * (a + b), -(two * phi.c1 * phi.c2)};
}

/// Quaternion q0 + q1 i + q2 j + q3 k to [q3 + q0 i; q1 + q2 i].
inline SpinorQ vivarelli(const Rational& q0, const Rational& q1, const Rational& q2, const Rational& q3) {
    return {{q3, q0}, {q1, q2}};
}

// ---------------------------------------------------------------------------
// Spinor sequences
// ---------------------------------------------------------------------------

inline SpinorQ spinor_term(const HoradamParams& h, std::int64_t n) { return epsilon(cw_term(h, n)); }

inline std::vector<SpinorQ> spinor_terms(const HoradamParams& h, std::size_t count) {
    std::vector<SpinorQ> out;
    out.reserve(count);
    for (const auto& x : cw_terms(h, count)) out.push_back(epsilon(x));
    return out;
}

/// eps(X) alpha^n + eps(Y) beta^n over Q[t]/(t^2 - d) with i adjoined.
inline SpinorQuad spinor_binet(const CartanSeqContext& ctx, std::int64_t n) {
    check_index(n);
    const auto e = static_cast<unsigned long>(n);
    return pow(ctx.alpha, e) * epsilon(ctx.X) + pow(ctx.beta, e) * epsilon(ctx.Y);
}

inline SpinorQuad spinor_binet(const HoradamParams& h, std::int64_t n) { return spinor_binet(make_context(h), n); }

inline SpinorQuad to_quad(const SpinorQ& x, std::int64_t d) {
    auto lift = [d](const ComplexRational& z) -> ComplexQuad {
        return {QuadElem::scalar(z.re, d), QuadElem::scalar(z.im, d)};
    };
    return {lift(x.c1), lift(x.c2)};
}

// ---------------------------------------------------------------------------
// Printed spinor displays
// ---------------------------------------------------------------------------

namespace detail {

/// H_n .. H_{n+3} of a preset as rationals.
inline std::array<Rational, 4> window(const HoradamParams& h, std::int64_t n) {
    const auto x = cw_term(h, n);
    return {Rational(x.s), Rational(x.ci), Rational(x.cj), Rational(x.ck)};
}

// The displayed closed forms, transcribed term by term.
inline SpinorQ printed_spinor_conjugate(const std::array<Rational, 4>& H) {
    const Rational half3 = H[3] / 2;
    return spinor_q(-H[1], H[2] - half3, H[2] + half3, -H[0]);
}
inline SpinorQ printed_mate(const std::array<Rational, 4>& H) {
    const Rational half3 = H[3] / 2;
    return spinor_q(-H[2] + half3, H[1], H[0], -(H[2] + half3));
}
inline SpinorQ printed_conjugate_lift(const std::array<Rational, 4>& H) {
    const Rational half3 = H[3] / 2;
    return spinor_q(H[0], -(H[2] + half3), -H[2] + half3, -H[1]);
}
inline SpinorQ printed_complex_conjugate(const std::array<Rational, 4>& H) {
    const Rational half3 = H[3] / 2;
    return spinor_q(H[0], -(H[2] + half3), H[2] - half3, -H[1]);
}

template <class Printed, class Computed>
ReconEntry compare_over_window(std::string name, const HoradamParams& h, Printed printed, Computed computed,
                               std::string note) {
    constexpr std::int64_t kSpan = 8;
    auto entry = compare_entry(std::move(name), printed(window(h, 0)), computed(cw_term(h, 0)), std::move(note));
    std::vector<std::string> coords;
    for (std::int64_t n = 0; n < kSpan; ++n) {
        for (const auto& c : differing_coords(printed(window(h, n)), computed(cw_term(h, n)), "")) {
            if (std::find(coords.begin(), coords.end(), c) == coords.end()) coords.push_back(c);
        }
    }
    entry.coords = coords;
    entry.verdict = coords.empty() ? Verdict::match : Verdict::mismatch;
    entry.extra["checked_n"] = Json::array({0, kSpan - 1});
    return entry;
}

struct PrintedGeneralSpinorBinet {
    Complex<QuadElem> x0, x1, y0, y1;
};

/// The general x0, x1, y0, y1 displays with sqrt(d) read as t.
inline PrintedGeneralSpinorBinet printed_general_spinor_binet(const HoradamParams& h) {
    const std::int64_t d = h.discriminant();
    auto Q = [d](const Rational& r) { return QuadElem::scalar(r, d); };
    const QuadElem t = QuadElem::root(d);
    const Rational p = h.p, q = h.q, a = h.a, b = h.b;
    const Rational w2 = p * b + q * a;  // pb + qa
    const QuadElem half = Q(Rational(1, 2));

    PrintedGeneralSpinorBinet out;
    out.x0 = {Q(b - p * a) + Q(a) * t,
              half * (Q(w2) * (Q(p * q) + t * Q(1 + p * p + p * q)) + Q(b * q) * (Q(q + 1) + Q(p) * t))};
    out.y0 = {Q(-b + p * a) + Q(a) * t,
              half * (Q(w2) * (Q(-p * q) + t * Q(1 + p * p + p * q)) + Q(b * q) * (Q(-q - 1) + Q(p) * t))};

    // t ((pb+qa)(2-p) - bq + 2b i) / 2
    const ComplexQuad radical{half * t * Q(w2 * (2 - p) - b * q), half * t * Q(2 * b)};
    // ((pb+qa)(2p - p^2 - 2pq + 4i) + 3bpq - 2bp i) / 2
    const ComplexQuad rational_part{half * Q(w2 * (2 * p - p * p - 2 * p * q) + 3 * b * p * q),
                                    half * Q(4 * w2 - 2 * b * p)};
    out.x1 = radical + rational_part;
    out.y1 = radical - rational_part;
    return out;
}

struct PrintedSpecialSpinorBinet {
    std::string preset;
    std::string label;
    QuadElem prefactor;
    SpinorQuad first;
    SpinorQuad second;
};

inline std::vector<PrintedSpecialSpinorBinet> printed_special_spinor_binet() {
    auto s2 = [](long r, long c) { return embed_surd(r, c, 2, 8); };
    auto z8 = [&](long r1, long c1, long r2, long c2) { return ComplexQuad{s2(r1, c1), s2(r2, c2)}; };
    auto q9 = [](Rational re, Rational im) {
        return ComplexQuad{QuadElem::scalar(std::move(re), 9), QuadElem::scalar(std::move(im), 9)};
    };
    const QuadElem inv_4sqrt2 = embed_surd(0, Rational(1, 8), 2, 8);  // 1/(4 sqrt 2) = sqrt 2 / 8
    const QuadElem third = QuadElem::scalar(Rational(1, 3), 9);
    return {
        {"pell", "SCP_n", inv_4sqrt2, {z8(2, 0, 13, 9), z8(-1, -1, -2, 2)}, {z8(-2, 0, -13, 9), z8(1, -1, -2, 2)}},
        {"pell_lucas", "SCp_n", inv_4sqrt2, {z8(2, 2, 23, 17), z8(-3, -1, 6, 2)},
         {z8(2, 2, -23, 17), z8(-3, -1, -6, 2)}},
        {"jacobsthal", "SCJ_n", third, {q9(1, 8), q9(0, 2)}, {q9(-1, Rational(-1, 2)), q9(Rational(-3, 2), 1)}},
        {"jacobsthal_lucas", "SCj_n", third, {q9(1, 8), q9(0, 2)}, {q9(1, Rational(1, 2)), q9(Rational(3, 2), -1)}},
    };
}

}  // namespace detail

/// Printed general spinor Binet components versus eps(X), eps(Y).
inline std::vector<ReconEntry> reconcile_spinor_binet(const HoradamParams& h, const std::string& name) {
    const auto ctx = make_context(h);
    const auto printed = detail::printed_general_spinor_binet(h);
    const QuadElem inv_2t = (QuadElem::scalar(2, ctx.d) * QuadElem::root(ctx.d)).inverse();

    const SpinorQuad printed_x{inv_2t * printed.x0, inv_2t * printed.x1};
    const SpinorQuad printed_y{inv_2t * printed.y0, inv_2t * printed.y1};
    const SpinorQuad printed_y_bare{printed.y0, printed.y1};
    const auto eps_x = epsilon(ctx.X);
    const auto eps_y = epsilon(ctx.Y);

    const std::string note = "1/(2 sqrt d) applied to both X and Y; sqrt d read as t";
    std::vector<ReconEntry> out;
    out.push_back(compare_entry("spinor_binet." + name + ".X", printed_x, eps_x, note));
    auto y = compare_entry("spinor_binet." + name + ".Y", printed_y, eps_y, note);
    y.extra["matches_without_prefactor_on_Y"] = same_value(printed_y_bare, eps_y);
    out.push_back(std::move(y));
    return out;
}

/**
 * Every printed spinor display except the initial conditions (which are
 * examples): conjugate, mate, conjugate lift, complex conjugate, the printed
 * recurrence, the general Binet components and the special Binet displays.
 */
inline std::vector<ReconEntry> reconcile_spinor_forms() {
    std::vector<ReconEntry> out;
    for (const auto name : kTablePresets) {
        const std::string n(name);
        const HoradamParams h = preset(name);
        out.push_back(detail::compare_over_window(
            "spinor_conjugate." + n, h, detail::printed_spinor_conjugate,
            [](const CartanNumber<BigInt>& x) { return tilde_conj(epsilon(x)); },
            "printed i C conj(SCW_n) versus i C conj(eps(CW_n)) with C = [[0,1],[-1,0]]"));
        out.push_back(detail::compare_over_window(
            "spinor_mate." + n, h, detail::printed_mate, [](const CartanNumber<BigInt>& x) { return mate(epsilon(x)); },
            ""));
        out.push_back(detail::compare_over_window(
            "spinor_of_conjugate." + n, h, detail::printed_conjugate_lift,
            [](const CartanNumber<BigInt>& x) { return epsilon(cn_conj(x)); }, ""));
        out.push_back(detail::compare_over_window(
            "spinor_complex_conjugate." + n, h, detail::printed_complex_conjugate,
            [](const CartanNumber<BigInt>& x) { return complex_conj(epsilon(x)); }, ""));
    }

    // Printed recurrence SCW_{n+1} = SCW_n + SCW_{n-1}, checked at n = 1.
    for (const auto name : kTablePresets) {
        const HoradamParams h = preset(name);
        const auto s = spinor_terms(h, 3);
        auto e = compare_entry("spinor_recurrence." + std::string(name), s[1] + s[0], s[2],
                               "SCW_2 predicted by SCW_{n+1} = SCW_n + SCW_{n-1} versus eps(CW_2)");
        out.push_back(std::move(e));
    }

    for (const auto name : kTablePresets) {
        for (auto& e : reconcile_spinor_binet(preset(name), std::string(name))) out.push_back(std::move(e));
    }

    for (const auto& special : detail::printed_special_spinor_binet()) {
        const auto ctx = make_context(preset(special.preset));
        const auto eps_x = epsilon(ctx.X);
        const auto eps_y = epsilon(ctx.Y);
        const SpinorQuad px = special.prefactor * special.first;
        const SpinorQuad py = special.prefactor * special.second;

        ReconEntry e;
        e.name = "spinor_binet_display." + special.label;
        e.printed = Json::object({{"X_part", to_json(px)}, {"Y_part", to_json(py)}});
        e.computed = Json::object({{"eps_X", to_json(eps_x)}, {"eps_Y", to_json(eps_y)}});
        e.verdict = Verdict::not_comparable;
        e.note = "display omits alpha^n and beta^n; bracket coefficients compared for information only";
        e.extra["X_part_differs_on"] = differing_coords(px, eps_x, "");
        e.extra["Y_part_differs_on"] = differing_coords(py, eps_y, "");
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace cartan
