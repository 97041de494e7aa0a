#pragma once

#include <complex>

namespace nls {

using cplx = std::complex<double>;

// 2x2 complex matrix with value semantics. Used for s^b, Jost solutions,
// scattering matrices and parametrices.
struct Mat2 {
    cplx m11{0.0}, m12{0.0}, m21{0.0}, m22{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    cplx det() const { return m11 * m22 - m12 * m21; }

    Mat2 inverse() const {
        const cplx d = det();
        return {m22 / d, -m12 / d, -m21 / d, m11 / d};
    }

    Mat2 transpose() const { return {m11, m21, m12, m22}; }

    Mat2 conj() const {
        return {std::conj(m11), std::conj(m12), std::conj(m21), std::conj(m22)};
    }

    double norm() const {
        return std::abs(m11) + std::abs(m12) + std::abs(m21) + std::abs(m22);
    }

    Mat2& operator+=(const Mat2& o) {
        m11 += o.m11; m12 += o.m12; m21 += o.m21; m22 += o.m22;
        return *this;
    }
    Mat2& operator-=(const Mat2& o) {
        m11 -= o.m11; m12 -= o.m12; m21 -= o.m21; m22 -= o.m22;
        return *this;
    }
    Mat2& operator*=(const cplx& c) {
        m11 *= c; m12 *= c; m21 *= c; m22 *= c;
        return *this;
    }
};

inline Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
inline Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
inline Mat2 operator*(Mat2 a, const cplx& c) { return a *= c; }
inline Mat2 operator*(const cplx& c, Mat2 a) { return a *= c; }

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

// e^{c sigma3} A e^{-c sigma3}: conjugation by the diagonal exponential.
inline Mat2 sigma3_conj(const cplx& c, const Mat2& a) {
    const cplx e2 = std::exp(2.0 * c);
    return {a.m11, a.m12 * e2, a.m21 / e2, a.m22};
}

// diag(e^c, e^{-c}) * A  and  A * diag(e^c, e^{-c})
inline Mat2 expsigma3_left(const cplx& c, const Mat2& a) {
    const cplx ep = std::exp(c), em = std::exp(-c);
    return {ep * a.m11, ep * a.m12, em * a.m21, em * a.m22};
}
inline Mat2 expsigma3_right(const Mat2& a, const cplx& c) {
    const cplx ep = std::exp(c), em = std::exp(-c);
    return {a.m11 * ep, a.m12 * em, a.m21 * ep, a.m22 * em};
}

inline const Mat2 sigma1{0.0, 1.0, 1.0, 0.0};
inline const Mat2 sigma3{1.0, 0.0, 0.0, -1.0};

}  // namespace nls
