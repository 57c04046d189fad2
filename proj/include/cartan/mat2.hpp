#pragma once

// 2x2 matrices over a commutative coefficient ring.

#include <ostream>

#include "cartan/exact_arith.hpp"

namespace cartan {

template <class R>
struct Mat2 {
    R m11{}, m12{}, m21{}, m22{};

    static Mat2 identity_like(const R& sample) {
        return {one_like(sample), zero_like(sample), zero_like(sample), one_like(sample)};
    }

    R det() const { return m11 * m22 - m12 * m21; }
    R trace() const { return m11 + m22; }

    Mat2& operator+=(const Mat2& o) {
        m11 += o.m11;
        m12 += o.m12;
        m21 += o.m21;
        m22 += o.m22;
        return *this;
    }
    Mat2& operator-=(const Mat2& o) {
        m11 -= o.m11;
        m12 -= o.m12;
        m21 -= o.m21;
        m22 -= o.m22;
        return *this;
    }

    friend Mat2 operator+(Mat2 x, const Mat2& y) { return x += y; }
    friend Mat2 operator-(Mat2 x, const Mat2& y) { return x -= y; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
                x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
        return os << "[[" << m.m11 << ", " << m.m12 << "], [" << m.m21 << ", " << m.m22 << "]]";
    }
};

/// Transpose composed with entrywise complex conjugation.
template <class R>
Mat2<Complex<R>> conj_transpose(const Mat2<Complex<R>>& m) {
    return {m.m11.conj(), m.m21.conj(), m.m12.conj(), m.m22.conj()};
}

}  // namespace cartan
