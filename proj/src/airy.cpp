#include "nls/airy.hpp"

#include <cmath>
#include <stdexcept>

namespace nls {

static const cplx I_UNIT(0.0, 1.0);

Mat2 airy_model_in_sector(cplx z, int sector) {
    if (sector < 1 || sector > 4)
        throw std::invalid_argument("airy_model_in_sector: sector 1..4");
    const bool upper = sector <= 2;
    const cplx zeta = std::exp(cplx(0.0, 2.0 * M_PI / 3.0));
    Mat2 A;
    if (upper) {
        const AiryValue a = complex_airy(z);
        const AiryValue b = complex_airy(zeta * zeta * z);
        A = {a.ai, b.ai, a.aip, zeta * zeta * b.aip};
    } else {
        const AiryValue a = complex_airy(z);
        const AiryValue b = complex_airy(zeta * z);
        A = {a.ai, -zeta * zeta * b.ai, a.aip, -b.aip};
    }
    A = expsigma3_right(A, -I_UNIT * M_PI / 6.0);
    // normalization fixed by the z -> infinity behavior (and det == 1):
    // sqrt(2 pi) e^{i pi/6} diag(1, -i) on the left
    const cplx n0 = std::sqrt(2.0 * M_PI) * std::exp(I_UNIT * M_PI / 6.0);
    A.m11 *= n0;
    A.m12 *= n0;
    A.m21 *= -I_UNIT * n0;
    A.m22 *= -I_UNIT * n0;

    Mat2 S = Mat2::identity();
    if (sector == 2) S = {1.0, 0.0, -1.0, 1.0};
    if (sector == 3) S = {1.0, 0.0, 1.0, 1.0};

    // z^{3/2} continuous within the closed sector: arg in [0, 2pi/3]+... the
    // principal power works except on the sector-3 boundary arg = +pi, where
    // the branch continuous from below is needed.
    cplx expo;
    if (sector == 3 && z.imag() == 0.0 && z.real() < 0.0) {
        const double m = std::pow(-z.real(), 1.5);
        expo = (2.0 / 3.0) * m * std::exp(cplx(0.0, -1.5 * M_PI));
    } else {
        expo = (2.0 / 3.0) * z * std::sqrt(z);
    }
    return expsigma3_right(A * S, expo);
}

Mat2 airy_model(cplx z) {
    const double th = std::arg(z);  // (-pi, pi]
    const double tol = 1e-13;
    if (z == cplx(0.0) || std::fabs(th) < tol || std::fabs(th - 2.0 * M_PI / 3.0) < tol ||
        std::fabs(std::fabs(th) - M_PI) < tol || std::fabs(th + 2.0 * M_PI / 3.0) < tol)
        throw std::invalid_argument("airy_model: z on the jump contour");
    int sector;
    if (th > 0.0)
        sector = (th < 2.0 * M_PI / 3.0) ? 1 : 2;
    else
        sector = (th > -2.0 * M_PI / 3.0) ? 4 : 3;
    return airy_model_in_sector(z, sector);
}

Mat2 airy_series_coeff(int j) {
    if (j < 1) throw std::invalid_argument("airy_series_coeff: j >= 1");
    // m_j = -(6^{-2j} (j+1/2)_{2j}) / ((6j-1) j!) [ (-1)^j  -6ij ; (-1)^j 6ij  1 ]
    double poch = 1.0;
    for (int m = 0; m < 2 * j; ++m) poch *= (j + 0.5 + m);
    double fact = 1.0;
    for (int m = 2; m <= j; ++m) fact *= m;
    const double pref = -std::pow(6.0, -2.0 * j) * poch / ((6.0 * j - 1.0) * fact);
    const double sj = (j % 2) ? -1.0 : 1.0;
    return Mat2{sj, -6.0 * j * I_UNIT, sj * 6.0 * j * I_UNIT, 1.0} * cplx(pref);
}

Mat2 airy_model_series(cplx z, int J) {
    Mat2 S = Mat2::identity();
    const cplx z32 = z * std::sqrt(z);
    cplx pw = 1.0;
    for (int j = 1; j <= J; ++j) {
        pw /= z32;
        S += airy_series_coeff(j) * pw;
    }
    const cplx z14 = std::sqrt(std::sqrt(z));
    const Mat2 N = Mat2{1.0, I_UNIT, I_UNIT, 1.0} * cplx(1.0 / std::sqrt(2.0));
    // z^{-sigma3/4} N S
    Mat2 out = N * S;
    out.m11 /= z14;
    out.m12 /= z14;
    out.m21 *= z14;
    out.m22 *= z14;
    return out;
}

}  // namespace nls
