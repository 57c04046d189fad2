#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact scalars: big integers, rationals, the quadratic ring Q[t]/(t^2 - d)
 * and complex numbers over any of them.
 *
 * Nothing in this library touches floating point. Rationals are always kept
 * in lowest terms with a positive denominator, so equality is structural.
 *
 * QuadElem carries its ring parameter d with every value. d is kept exactly
 * as computed (p^2 + 4q for a Horadam sequence) and is never reduced to its
 * squarefree part. When d is a perfect square the ring has zero divisors, so
 * inversion can fail even for nonzero elements.
 *
 * The small free-function vocabulary below (zero_like, one_like, is_zero,
 * div_int) is what the generic algebra templates use to build constants in
 * "the same ring as x" without a default constructor that would lose d.
 */

#include <cstdint>
#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "cartan/errors.hpp"

namespace cartan {

using BigInt = mpz_class;

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(const BigInt& v) : v_(v) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (sgn(den) == 0) throw division_by_zero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long long num, long long den)
        : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

    /// Parses "n" or "n/d" (optional leading '-').
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
            return Rational(BigInt(std::string(text.substr(0, slash))),
                            BigInt(std::string(text.substr(slash + 1))));
        } catch (const std::invalid_argument&) {
            throw invalid_argument("not a rational: '" + std::string(text) + "'");
        }
    }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// "num/den", or just "num" when the denominator is 1.
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero("inverse of rational 0");
        return from_mpq(1 / v_);
    }

    Rational operator-() const { return from_mpq(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero("rational division");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const int c = cmp(x.v_, y.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
        return os << x.to_string();
    }

private:
    static Rational from_mpq(const mpq_class& q) {
        Rational r;
        r.v_ = q;
        return r;
    }

    mpq_class v_{0};
};

inline Rational pow(const Rational& base, unsigned long e) {
    Rational result{1};
    Rational b = base;
    while (e != 0) {
        if ((e & 1U) != 0) result *= b;
        e >>= 1U;
        if (e != 0) b *= b;
    }
    return result;
}

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target expected");

inline BigInt to_bigint(std::int64_t v) { return BigInt(static_cast<long>(v)); }

/// Nonnegative integer square root of d when d is a perfect square.
inline std::optional<std::int64_t> exact_sqrt(std::int64_t d) {
    if (d < 0) return std::nullopt;
    const BigInt bd = to_bigint(d);
    if (mpz_perfect_square_p(bd.get_mpz_t()) == 0) return std::nullopt;
    const BigInt root = sqrt(bd);
    return static_cast<std::int64_t>(root.get_si());
}

// ---------------------------------------------------------------------------
// QuadElem: a + b t with t^2 = d
// ---------------------------------------------------------------------------

class QuadElem {
public:
    /// The zero of Q[t]/(t^2). Prefer the explicit constructor.
    QuadElem() = default;
    QuadElem(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {}

    static QuadElem scalar(Rational a, std::int64_t d) { return {std::move(a), Rational{0}, d}; }
    /// The generator t, a square root of d.
    static QuadElem root(std::int64_t d) { return {Rational{0}, Rational{1}, d}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// a^2 - d b^2; the product of x with its conjugate.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadElem conj() const { return {a_, -b_, d_}; }

    QuadElem inverse() const {
        if (is_zero()) throw division_by_zero("inverse of 0 in Q[t]/(t^2-" + std::to_string(d_) + ")");
        const Rational n = norm();
        if (n.is_zero()) {
            throw not_invertible(to_string() + " is a zero divisor (norm 0, d=" + std::to_string(d_) +
                                 ")");
        }
        return {a_ / n, -b_ / n, d_};
    }

    QuadElem operator-() const { return {-a_, -b_, d_}; }

    QuadElem& operator+=(const QuadElem& o) {
        check_ring(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadElem& operator-=(const QuadElem& o) {
        check_ring(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadElem& operator*=(const QuadElem& o) {
        check_ring(o);
        Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
        Rational b = a_ * o.b_ + o.a_ * b_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadElem& operator*=(const Rational& s) {
        a_ *= s;
        b_ *= s;
        return *this;
    }

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator*(const Rational& s, QuadElem x) { return x *= s; }
    friend QuadElem operator*(QuadElem x, const Rational& s) { return x *= s; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) = default;

    std::string to_string() const {
        return a_.to_string() + " + (" + b_.to_string() + ")*t [t^2=" + std::to_string(d_) + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.to_string(); }

private:
    void check_ring(const QuadElem& o) const {
        if (d_ != o.d_) {
            throw ring_mismatch("Q[t]/(t^2-" + std::to_string(d_) + ") vs Q[t]/(t^2-" +
                                std::to_string(o.d_) + ")");
        }
    }

    Rational a_{};
    Rational b_{};
    std::int64_t d_ = 0;
};

inline QuadElem pow(const QuadElem& base, unsigned long e) {
    QuadElem result = QuadElem::scalar(1, base.d());
    QuadElem b = base;
    while (e != 0) {
        if ((e & 1U) != 0) result *= b;
        e >>= 1U;
        if (e != 0) b *= b;
    }
    return result;
}

/**
 * Embeds r + c*sqrt(s) into Q[t]/(t^2 - d) for d = m^2 s (m > 0), sending
 * sqrt(s) to t/m. For d = 8 this is the map sqrt(2) -> t/2.
 */
inline QuadElem embed_surd(const Rational& r, const Rational& c, std::int64_t s, std::int64_t d) {
    if (s == 0 || d == 0 || d % s != 0) {
        throw invalid_argument("cannot embed sqrt(" + std::to_string(s) + ") into d=" + std::to_string(d));
    }
    const auto m = exact_sqrt(d / s);
    if (!m) {
        throw invalid_argument("d=" + std::to_string(d) + " is not a square multiple of " + std::to_string(s));
    }
    return {r, c / Rational(static_cast<long long>(*m)), d};
}

// ---------------------------------------------------------------------------
// Complex<R>: re + im i with i^2 = -1, i commuting with everything in R
// ---------------------------------------------------------------------------

template <class R>
struct Complex {
    R re{};
    R im{};

    Complex conj() const { return {re, -im}; }
    /// re^2 + im^2, an element of R.
    R norm2() const { return re * re + im * im; }

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        R r = re * o.re - im * o.im;
        R m = re * o.im + o.re * im;
        re = std::move(r);
        im = std::move(m);
        return *this;
    }

    friend Complex operator+(Complex x, const Complex& y) { return x += y; }
    friend Complex operator-(Complex x, const Complex& y) { return x -= y; }
    friend Complex operator*(Complex x, const Complex& y) { return x *= y; }
    friend bool operator==(const Complex&, const Complex&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
        return os << "(" << z.re << ") + (" << z.im << ")i";
    }
};

template <class T>
struct is_complex : std::false_type {};
template <class R>
struct is_complex<Complex<R>> : std::true_type {};

/// Scalar action of the base ring (or anything that acts on it) on Complex<R>.
template <class S, class R>
    requires(!is_complex<S>::value) && requires(const S& s, const R& r) {
        { s * r } -> std::convertible_to<R>;
    }
Complex<R> operator*(const S& s, const Complex<R>& z) {
    return {s * z.re, s * z.im};
}

using ComplexRational = Complex<Rational>;
using ComplexQuad = Complex<QuadElem>;

// ---------------------------------------------------------------------------
// Ring vocabulary used by the generic templates
// ---------------------------------------------------------------------------

inline BigInt zero_like(const BigInt&) { return BigInt(0); }
inline BigInt one_like(const BigInt&) { return BigInt(1); }
inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
/// Exact x / n; throws requires_rational when n does not divide x.
inline BigInt div_int(const BigInt& x, long n) {
    if (n == 0) throw division_by_zero("integer division");
    if (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n)) == 0) {
        throw requires_rational(x.get_str() + " / " + std::to_string(n));
    }
    BigInt q = x / n;
    return q;
}

inline Rational zero_like(const Rational&) { return Rational{0}; }
inline Rational one_like(const Rational&) { return Rational{1}; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational div_int(const Rational& x, long n) { return x / Rational(n); }

inline QuadElem zero_like(const QuadElem& x) { return QuadElem::scalar(0, x.d()); }
inline QuadElem one_like(const QuadElem& x) { return QuadElem::scalar(1, x.d()); }
inline bool is_zero(const QuadElem& x) { return x.is_zero(); }
inline QuadElem div_int(const QuadElem& x, long n) {
    if (n == 0) throw division_by_zero("QuadElem / 0");
    return Rational(1, n) * x;
}

template <class R>
Complex<R> zero_like(const Complex<R>& z) {
    return {zero_like(z.re), zero_like(z.re)};
}
template <class R>
Complex<R> one_like(const Complex<R>& z) {
    return {one_like(z.re), zero_like(z.re)};
}
template <class R>
bool is_zero(const Complex<R>& z) {
    return is_zero(z.re) && is_zero(z.im);
}
template <class R>
Complex<R> div_int(const Complex<R>& z, long n) {
    return {div_int(z.re, n), div_int(z.im, n)};
}
/// The imaginary unit in the same ring as z.
template <class R>
Complex<R> imag_unit_like(const Complex<R>& z) {
    return {zero_like(z.re), one_like(z.re)};
}

/// Minimal interface the generic algebra templates need from a coefficient ring.
template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& x, const R& y) {
    { x + y } -> std::convertible_to<R>;
    { x - y } -> std::convertible_to<R>;
    { x * y } -> std::convertible_to<R>;
    { -x } -> std::convertible_to<R>;
    { zero_like(x) } -> std::convertible_to<R>;
    { one_like(x) } -> std::convertible_to<R>;
    { is_zero(x) } -> std::convertible_to<bool>;
    { div_int(x, 2L) } -> std::convertible_to<R>;
};

// Operation names used throughout the tests and docs.
inline QuadElem quad_mul(const QuadElem& x, const QuadElem& y) { return x * y; }
inline QuadElem quad_inv(const QuadElem& x) { return x.inverse(); }
inline QuadElem quad_conj(const QuadElem& x) { return x.conj(); }
inline ComplexQuad cq_mul(const ComplexQuad& z, const ComplexQuad& w) { return z * w; }

}  // namespace cartan
