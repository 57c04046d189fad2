#pragma once

/**
 * @file cartan_number.hpp
 * @brief The Cartan number algebra s + ci i + cj j + ck k.
 *
 * Units multiply as
 *
 *         |  1    i    j     k
 *     ----+----------------------
 *      1  |  1    i    j     k
 *      i  |  i    1    j    -k
 *      j  |  j   -j    0    1+i
 *      k  |  k    k   1-i    0
 *
 * The algebra is isomorphic to 2x2 matrices through theta, which sends
 *
 *     1 -> I,  i -> [[0,1],[1,0]],  j -> [[1,-1],[1,-1]],  k -> 1/2 [[1,1],[-1,-1]].
 *
 * Coordinates live in any commutative CoefficientRing: BigInt for the integer
 * sequences, Rational once theta or the spinor map need halves, QuadElem for
 * Binet coefficients.
 */

#include <array>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <type_traits>
#include <utility>

#include "cartan/exact_arith.hpp"
#include "cartan/mat2.hpp"

namespace cartan {

template <class R>
struct CartanNumber {
    R s{};
    R ci{};
    R cj{};
    R ck{};

    /// Scalar r embedded as r * 1.
    static CartanNumber scalar(const R& r) { return {r, zero_like(r), zero_like(r), zero_like(r)}; }

    const R& operator[](std::size_t idx) const {
        switch (idx) {
            case 0: return s;
            case 1: return ci;
            case 2: return cj;
            default: return ck;
        }
    }
    R& operator[](std::size_t idx) {
        return const_cast<R&>(std::as_const(*this)[idx]);
    }

    CartanNumber operator-() const { return {-s, -ci, -cj, -ck}; }
    CartanNumber& operator+=(const CartanNumber& o) {
        s += o.s;
        ci += o.ci;
        cj += o.cj;
        ck += o.ck;
        return *this;
    }
    CartanNumber& operator-=(const CartanNumber& o) {
        s -= o.s;
        ci -= o.ci;
        cj -= o.cj;
        ck -= o.ck;
        return *this;
    }

    friend CartanNumber operator+(CartanNumber x, const CartanNumber& y) { return x += y; }
    friend CartanNumber operator-(CartanNumber x, const CartanNumber& y) { return x -= y; }
    friend bool operator==(const CartanNumber&, const CartanNumber&) = default;

    friend std::ostream& operator<<(std::ostream& os, const CartanNumber& x) {
        return os << "(" << x.s << ", " << x.ci << ", " << x.cj << ", " << x.ck << ")";
    }
};

template <class T>
struct is_cartan : std::false_type {};
template <class R>
struct is_cartan<CartanNumber<R>> : std::true_type {};

inline constexpr std::array<const char*, 4> kCartanCoordNames{"s", "i", "j", "k"};

/// Coefficient (or anything acting on the coefficient ring) times a Cartan number.
template <class S, class R>
    requires(!is_cartan<S>::value) && requires(const S& c, const R& r) {
        { c * r } -> std::convertible_to<R>;
    }
CartanNumber<R> operator*(const S& c, const CartanNumber<R>& x) {
    return {c * x.s, c * x.ci, c * x.cj, c * x.ck};
}

/// Applies f to each coordinate; the usual way to change coefficient ring.
template <class F, class R>
auto map_coords(const CartanNumber<R>& x, F&& f) -> CartanNumber<std::invoke_result_t<F&, const R&>> {
    return {f(x.s), f(x.ci), f(x.cj), f(x.ck)};
}

namespace detail {

// Unit products as integer coordinate vectors: kUnitTable[a][b] = e_a * e_b.
inline constexpr std::array<std::array<std::array<int, 4>, 4>, 4> kUnitTable{{
    // 1 * {1, i, j, k}
    {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
    // i * {1, i, j, k}
    {{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}},
    // j * {1, i, j, k}
    {{{0, 0, 1, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}, {1, 1, 0, 0}}},
    // k * {1, i, j, k}
    {{{0, 0, 0, 1}, {0, 0, 0, 1}, {1, -1, 0, 0}, {0, 0, 0, 0}}},
}};

}  // namespace detail

/// Product as the bilinear extension of the unit table.
template <CoefficientRing R>
CartanNumber<R> operator*(const CartanNumber<R>& x, const CartanNumber<R>& y) {
    const R zero = zero_like(x.s);
    CartanNumber<R> out{zero, zero, zero, zero};
    for (std::size_t a = 0; a < 4; ++a) {
        if (is_zero(x[a])) continue;
        for (std::size_t b = 0; b < 4; ++b) {
            if (is_zero(y[b])) continue;
            const R xy = x[a] * y[b];
            for (std::size_t c = 0; c < 4; ++c) {
                const int coef = detail::kUnitTable[a][b][c];
                if (coef == 1) {
                    out[c] += xy;
                } else if (coef == -1) {
                    out[c] -= xy;
                }
            }
        }
    }
    return out;
}

template <CoefficientRing R>
CartanNumber<R> conj(const CartanNumber<R>& x) {
    return {x.s, -x.ci, -x.cj, -x.ck};
}

/// s^2 - ci^2 - 2 cj ck, the scalar part of x * conj(x).
template <CoefficientRing R>
R character(const CartanNumber<R>& x) {
    return x.s * x.s - x.ci * x.ci - (x.cj * x.ck + x.cj * x.ck);
}

template <CoefficientRing R>
CartanNumber<R> zero_like(const CartanNumber<R>& x) {
    return CartanNumber<R>::scalar(zero_like(x.s));
}
template <CoefficientRing R>
CartanNumber<R> one_like(const CartanNumber<R>& x) {
    return CartanNumber<R>::scalar(one_like(x.s));
}
template <CoefficientRing R>
bool is_zero(const CartanNumber<R>& x) {
    return is_zero(x.s) && is_zero(x.ci) && is_zero(x.cj) && is_zero(x.ck);
}
template <CoefficientRing R>
CartanNumber<R> div_int(const CartanNumber<R>& x, long n) {
    return {div_int(x.s, n), div_int(x.ci, n), div_int(x.cj, n), div_int(x.ck, n)};
}

/**
 * Matrix representation
 *
 *     theta(s + ci i + cj j + ck k) = [[s + cj + ck/2,  ci - cj + ck/2],
 *                                      [ci + cj - ck/2, s - cj - ck/2 ]].
 *
 * Over BigInt this throws requires_rational when ck is odd.
 */
template <CoefficientRing R>
Mat2<R> theta(const CartanNumber<R>& x) {
    const R half_k = div_int(x.ck, 2);
    return {x.s + x.cj + half_k, x.ci - x.cj + half_k, x.ci + x.cj - half_k, x.s - x.cj - half_k};
}

/// Inverse of theta; defined on every 2x2 matrix given division by 4.
template <CoefficientRing R>
CartanNumber<R> theta_inv(const Mat2<R>& m) {
    const R diag = m.m11 - m.m22;  // 2 cj + ck
    const R anti = m.m12 - m.m21;  // -2 cj + ck
    return {div_int(m.m11 + m.m22, 2), div_int(m.m12 + m.m21, 2), div_int(diag - anti, 4),
            div_int(diag + anti, 2)};
}

inline CartanNumber<Rational> to_rational(const CartanNumber<BigInt>& x) {
    return map_coords(x, [](const BigInt& v) { return Rational(v); });
}

inline CartanNumber<QuadElem> to_quad(const CartanNumber<BigInt>& x, std::int64_t d) {
    return map_coords(x, [d](const BigInt& v) { return QuadElem::scalar(Rational(v), d); });
}

inline CartanNumber<BigInt> cartan_int(long s, long i, long j, long k) {
    return {BigInt(s), BigInt(i), BigInt(j), BigInt(k)};
}

inline CartanNumber<Rational> cartan_q(Rational s, Rational i, Rational j, Rational k) {
    return {std::move(s), std::move(i), std::move(j), std::move(k)};
}

// Operation names used throughout the tests and docs.
template <CoefficientRing R>
CartanNumber<R> cn_mul(const CartanNumber<R>& x, const CartanNumber<R>& y) {
    return x * y;
}
template <CoefficientRing R>
CartanNumber<R> cn_conj(const CartanNumber<R>& x) {
    return conj(x);
}

}  // namespace cartan
