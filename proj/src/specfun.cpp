#include "nls/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace nls {

// ---------------------------------------------------------------------------
// log Gamma

cplx log_gamma(cplx z) {
    if (z.real() <= 0.0 && z.imag() == 0.0 && z.real() == std::floor(z.real()))
        throw std::invalid_argument("log_gamma: pole at nonpositive integer");
    // Reflect into Re z >= 0.5 to keep the recurrence short.
    if (z.real() < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1-z)
        const cplx lp = std::log(M_PI / std::sin(M_PI * z));
        return lp - log_gamma(1.0 - z);
    }
    cplx shift = 0.0;
    while (std::abs(z) < 12.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    // Stirling: B_{2n}/(2n(2n-1) z^{2n-1})
    static const double c[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
                               1.0 / 1188, -691.0 / 360360, 1.0 / 156,
                               -3617.0 / 122400};
    const cplx z2 = 1.0 / (z * z);
    cplx series = 0.0, pw = 1.0 / z;
    for (double cn : c) {
        series += cn * pw;
        pw *= z2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI) + series + shift;
}

// ---------------------------------------------------------------------------
// double-double helpers (Dekker/Knuth), enough for the Airy Maclaurin series

namespace {

struct dd {
    double hi, lo;
};

inline dd two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_sum(s.hi, s.lo);
}

inline dd two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_sum(p.hi, p.lo);
}

inline dd dd_div_d(dd a, double d) {
    const double q0 = a.hi / d;
    dd r = two_prod(q0, -d);
    dd rem = dd_add(a, r);
    const double q1 = (rem.hi + rem.lo) / d;
    return quick_sum(q0, q1);
}

inline dd dd_mul_d(dd a, double d) {
    dd p = two_prod(a.hi, d);
    p.lo += a.lo * d;
    return quick_sum(p.hi, p.lo);
}

struct cdd {
    dd re, im;
};

inline cdd cdd_from(cplx z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

inline cdd cdd_add(cdd a, cdd b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline cdd cdd_mul(cdd a, cdd b) {
    dd re = dd_add(dd_mul(a.re, b.re), dd_mul_d(dd_mul(a.im, b.im), -1.0));
    dd im = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
    return {re, im};
}

inline cdd cdd_div_d(cdd a, double d) { return {dd_div_d(a.re, d), dd_div_d(a.im, d)}; }

inline cdd cdd_mul_d(cdd a, double d) { return {dd_mul_d(a.re, d), dd_mul_d(a.im, d)}; }

inline cplx cdd_to(cdd a) { return {a.re.hi + a.re.lo, a.im.hi + a.im.lo}; }

inline double cdd_abs(cdd a) { return std::hypot(a.re.hi, a.im.hi); }

// Ai(0) and -Ai'(0) as double-double pairs; the e^{2 zeta} cancellation in
// c1 f - c2 g needs them beyond double precision.
const dd AI0{0.3550280538878172, 2.05233632436212e-17};
const dd AIP0{0.2588194037928068, -2.522243111610832e-17};

AiryValue airy_maclaurin(cplx zin) {
    const cdd z = cdd_from(zin);
    const cdd z3 = cdd_mul(z, cdd_mul(z, z));

    // f  = sum t_k,       t_0 = 1,     t_{k+1} = t_k z^3 / ((3k+2)(3k+3))
    // g  = sum s_k,       s_0 = z,     s_{k+1} = s_k z^3 / ((3k+3)(3k+4))
    // f' = sum p_k (k>=1), p_1 = z^2/2, p_{k+1} = p_k z^3 (k+1) / (k(3k+2)(3k+3))
    // g' = sum q_k,       q_0 = 1,     q_{k+1} = q_k z^3 / ((3k+1)(3k+3))
    cdd t{{1.0, 0.0}, {0.0, 0.0}}, s = z;
    cdd p = cdd_div_d(cdd_mul(z, z), 2.0), q{{1.0, 0.0}, {0.0, 0.0}};
    cdd f = t, g = s, fp = p, gp = q;
    for (int k = 0; k < 120; ++k) {
        const double a = 3.0 * k;
        t = cdd_div_d(cdd_mul(t, z3), (a + 2.0) * (a + 3.0));
        s = cdd_div_d(cdd_mul(s, z3), (a + 3.0) * (a + 4.0));
        q = cdd_div_d(cdd_mul(q, z3), (a + 1.0) * (a + 3.0));
        // p_{m+1} = p_m z^3 (m+1)/(m (3m+2)(3m+3)) with m = k+1
        p = cdd_div_d(cdd_mul_d(cdd_mul(p, z3), k + 2.0),
                      (k + 1.0) * (a + 5.0) * (a + 6.0));
        f = cdd_add(f, t);
        g = cdd_add(g, s);
        fp = cdd_add(fp, p);
        gp = cdd_add(gp, q);
        if (cdd_abs(t) + cdd_abs(s) + cdd_abs(p) + cdd_abs(q) <
            1e-40 * (cdd_abs(f) + cdd_abs(g) + 1.0))
            break;
    }
    AiryValue v;
    // Ai = c1 f - c2 g, Ai' = c1 f' - c2 g'
    cdd ai = cdd_add(cdd_mul(f, {AI0, {0.0, 0.0}}),
                     cdd_mul_d(cdd_mul(g, {AIP0, {0.0, 0.0}}), -1.0));
    cdd aip = cdd_add(cdd_mul(fp, {AI0, {0.0, 0.0}}),
                      cdd_mul_d(cdd_mul(gp, {AIP0, {0.0, 0.0}}), -1.0));
    v.ai = cdd_to(ai);
    v.aip = cdd_to(aip);
    return v;
}

AiryValue airy_asymptotic_direct(cplx z) {
    // Poincare series, optimally truncated; used for |arg z| <= 5pi/6 where
    // the omitted subdominant exponential is negligible.
    const cplx z12 = std::sqrt(z);
    const cplx z14 = std::sqrt(z12);
    const cplx zeta = (2.0 / 3.0) * z * z12;
    const cplx izeta = 1.0 / zeta;
    cplx su = 1.0, sv = 1.0;
    cplx termu = 1.0;
    double prev = 1e300;
    for (int n = 1; n <= 40; ++n) {
        const double num = (6.0 * n - 5.0) * (6.0 * n - 3.0) * (6.0 * n - 1.0);
        termu *= num / ((2.0 * n - 1.0) * 216.0 * n) * izeta;
        const double mag = std::abs(termu);
        if (mag > prev) break;  // divergence onset
        prev = mag;
        const double sgn = (n % 2) ? -1.0 : 1.0;
        su += sgn * termu;
        sv += sgn * termu * ((6.0 * n + 1.0) / (1.0 - 6.0 * n));
        if (mag < 1e-18) break;
    }
    const double c = 0.28209479177387814;  // 1/(2 sqrt(pi))
    const cplx e = std::exp(-zeta);
    AiryValue v;
    v.ai = c * e / z14 * su;
    v.aip = -c * e * z14 * sv;
    return v;
}

AiryValue airy_asymptotic(cplx z) {
    // Near the anti-Stokes line arg z = +-pi a single series loses the
    // comparably-sized second exponential; rotate through the connection
    // formula Ai(z) = -w Ai(wz) - w^2 Ai(w^2 z), w = e^{2pi i/3}, whose two
    // arguments land safely inside |arg| < 3pi/4.
    if (std::fabs(std::arg(z)) <= 5.0 * M_PI / 6.0) return airy_asymptotic_direct(z);
    const cplx w = std::exp(cplx(0.0, 2.0 * M_PI / 3.0));
    const AiryValue a = airy_asymptotic_direct(w * z);
    const AiryValue b = airy_asymptotic_direct(w * w * z);
    AiryValue v;
    v.ai = -w * a.ai - w * w * b.ai;
    v.aip = -w * w * a.aip - w * b.aip;
    return v;
}

}  // namespace

AiryValue complex_airy(cplx z) {
    // Seam at |z| = 9: the dd Maclaurin sum stays exact to double precision
    // up to there, and the asymptotic truncation floor e^{-4/3 |z|^{3/2}} is
    // below machine epsilon beyond.
    if (std::abs(z) <= 9.0) return airy_maclaurin(z);
    return airy_asymptotic(z);
}

double airy_seam_mismatch(double r, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double th = -M_PI + (2.0 * M_PI) * (i + 0.5) / samples;
        const cplx z = std::polar(r, th);
        const AiryValue a = airy_maclaurin(z);
        const AiryValue b = airy_asymptotic(z);
        // compare on the exponentially rescaled scale used by the model RH problem
        const cplx w = std::exp((2.0 / 3.0) * z * std::sqrt(z));
        worst = std::max(worst, std::abs((a.ai - b.ai) * w));
        worst = std::max(worst, std::abs((a.aip - b.aip) * w));
    }
    return worst;
}

}  // namespace nls
