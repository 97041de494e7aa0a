#include "nls/cauchyint.hpp"

#include <cmath>
#include <stdexcept>

namespace nls {

static const cplx I_UNIT(0.0, 1.0);

cplx cauchy_sqrt_endpoint_weight(double a, double b, cplx z) {
    // h(z) = (2 arctan(sqrt(z-b)/sqrt(b-a)) - pi)/sqrt(z-b), principal roots.
    const cplx rt = std::sqrt(z - b);
    return (2.0 * std::atan(rt / std::sqrt(b - a)) - M_PI) / rt;
}

static double dist_to_segment(cplx z, double a, double b) {
    const double x = z.real(), y = z.imag();
    if (x < a) return std::hypot(x - a, y);
    if (x > b) return std::hypot(x - b, y);
    return std::fabs(y);
}

// Graded panels on [lo,hi] refined toward an interior focus point.
static cplx integrate_focus(const cplx_fn& f, double lo, double hi, double focus,
                            int panels = 40, int n = 20) {
    cplx acc = 0.0;
    if (focus > lo + 1e-300)
        acc += integrate_graded(f, lo, std::min(focus, hi), false, panels, n);
    if (focus < hi - 1e-300)
        acc += integrate_graded(f, std::max(focus, lo), hi, true, panels, n);
    return acc;
}

cplx cauchy_sqrt_endpoint(const cplx_fn& g0, double a, double b, cplx z) {
    if (z.imag() == 0.0 && z.real() <= b)
        throw std::invalid_argument("cauchy_sqrt_endpoint: z on (-inf, b]");
    const double L = b - a;
    const double d = dist_to_segment(z, a, b);

    if (d >= 0.05 * L) {
        auto f = [&](double s) { return g0(s) / (s - z); };
        cplx v1 = integrate_inv_sqrt_right(f, a, b, 64);
        cplx v2 = integrate_inv_sqrt_right(f, a, b, 128);
        if (std::abs(v1 - v2) > 1e-12 * (1.0 + std::abs(v2)))
            v2 = integrate_inv_sqrt_right(f, a, b, 256);
        return v2;
    }

    // Near field: subtract the foot-point value against the closed form and
    // resolve the peaked remainder in the tau = sqrt(b-s) variable.
    const double sz = std::min(std::max(z.real(), a), b);
    const cplx c0 = g0(sz);
    const double T = std::sqrt(L);
    const double tauf = std::sqrt(b - sz);
    auto f = [&](double tau) {
        const double s = b - tau * tau;
        return 2.0 * (g0(s) - c0) / (s - z);
    };
    return c0 * cauchy_sqrt_endpoint_weight(a, b, z) + integrate_focus(f, 0.0, T, tauf);
}

cplx EndpointExpansion::evaluate(cplx z) const {
    const cplx w = z - cplx(b);
    const cplx rt = std::sqrt(w);
    cplx acc = 0.0;
    cplx pw = 1.0 / rt;
    for (int n = 0; n <= order; ++n) {
        acc += -M_PI * singular_coeffs[n] * pw;
        pw *= w;
    }
    pw = 1.0;
    for (int n = 0; n < order; ++n) {
        acc += regular_coeffs[n] * pw;
        pw *= w;
    }
    return acc;
}

EndpointExpansion endpoint_expansion(const cplx_fn& g0, const std::vector<cplx>& derivs,
                                     double a, double b, int N) {
    if (N < 0) throw std::invalid_argument("endpoint_expansion: N must be >= 0");
    if (static_cast<int>(derivs.size()) < N + 1)
        throw std::invalid_argument("endpoint_expansion: need derivatives to order N at b");
    const double L = b - a;
    const int M = static_cast<int>(derivs.size()) - 1;

    // taylor[m] = g0^{(m)}(b)/m!
    std::vector<cplx> taylor(M + 1);
    double fact = 1.0;
    for (int m = 0; m <= M; ++m) {
        if (m > 0) fact *= m;
        taylor[m] = derivs[m] / fact;
    }

    // g_n(s): iterated difference quotients, switching to the Taylor form near b.
    auto g_n = [&](int n, double s) -> cplx {
        if (std::fabs(s - b) < 0.05 * L && M >= n) {
            cplx acc = 0.0, pw = 1.0;
            for (int m = n; m <= M; ++m) {
                acc += taylor[m] * pw;
                pw *= (s - b);
            }
            return acc;
        }
        cplx v = g0(s);
        for (int j = 0; j < n; ++j) v = (v - taylor[j]) / (s - b);
        return v;
    };

    EndpointExpansion ex;
    ex.a = a;
    ex.b = b;
    ex.order = N;
    ex.singular_coeffs.assign(taylor.begin(), taylor.begin() + (N + 1));
    ex.regular_coeffs.resize(N);
    for (int n = 0; n < N; ++n) {
        cplx fn = 0.0;
        for (int j = 0; j <= n; ++j) {
            const double h_nj = 2.0 * (((n - j) % 2) ? -1.0 : 1.0) *
                                std::pow(L, -(n - j) - 0.5) / (2.0 * (n - j) + 1.0);
            fn += taylor[j] * h_nj;
        }
        auto gq = [&](double s) { return g_n(n + 1, s); };
        const cplx Cn = integrate_inv_sqrt_right(gq, a, b, 128);
        ex.regular_coeffs[n] = fn + Cn;
    }
    return ex;
}

cplx cauchy_cut_weighted(const cplx_fn& density, double Ea, double Eb, cplx k, int n) {
    if (k.imag() == 0.0 && k.real() >= Ea && k.real() <= Eb)
        throw std::invalid_argument("cauchy_cut_weighted: k on the cut");
    const double L = Eb - Ea;
    const double m = 0.5 * (Ea + Eb);
    const double d = dist_to_segment(k, Ea, Eb);
    const double gap_floor0 = 8.0 * 2.2e-16 * std::max({1.0, std::fabs(Ea), std::fabs(Eb)});

    if (d >= 0.05 * L) {
        // tau = sqrt(s - Ea) resp. sqrt(Eb - s): the density's sqrt-type
        // branch-point behavior becomes smooth in tau
        auto fl = [&](double tau) {
            const double s = Ea + std::max(tau * tau, gap_floor0);
            return 2.0 * density(s) / (I_UNIT * std::sqrt(Eb - s) * (s - k));
        };
        auto fr = [&](double tau) {
            const double s = Eb - std::max(tau * tau, gap_floor0);
            return 2.0 * density(s) / (I_UNIT * std::sqrt(s - Ea) * (s - k));
        };
        return integrate_gl(fl, 0.0, std::sqrt(m - Ea), n) +
               integrate_gl(fr, 0.0, std::sqrt(Eb - m), n);
    }

    // Near field: int ds/(X+ (s-k)) = pi i / Xc(k) with Xc = sqrt(k-Ea)sqrt(k-Eb).
    // The subtraction point only needs to be close to the foot; keep it off
    // the endpoints where the density may be singular.
    const double foot =
        std::min(std::max(k.real(), Ea + 1e-6 * L), Eb - 1e-6 * L);
    const cplx c0 = density(foot);
    const cplx Xc = std::sqrt(k - Ea) * std::sqrt(k - Eb);
    cplx acc = c0 * M_PI * I_UNIT / Xc;

    const double Tl = std::sqrt(m - Ea), Tr = std::sqrt(Eb - m);
    const double gap_floor = 8.0 * 2.2e-16 * std::max({1.0, std::fabs(Ea), std::fabs(Eb)});
    auto fl = [&](double tau) {  // s = Ea + tau^2 on [Ea, m]
        const double s = Ea + std::max(tau * tau, gap_floor);
        return 2.0 * (density(s) - c0) / (I_UNIT * std::sqrt(Eb - s) * (s - k));
    };
    auto fr = [&](double tau) {  // s = Eb - tau^2 on [m, Eb]
        const double s = Eb - std::max(tau * tau, gap_floor);
        return 2.0 * (density(s) - c0) / (I_UNIT * std::sqrt(s - Ea) * (s - k));
    };
    const double tl = (foot <= m) ? std::sqrt(foot - Ea) : Tl;
    const double tr = (foot >= m) ? std::sqrt(Eb - foot) : Tr;
    acc += integrate_focus(fl, 0.0, Tl, tl);
    acc += integrate_focus(fr, 0.0, Tr, tr);
    return acc;
}

cplx cut_weighted_integral(const cplx_fn& density, double Ea, double Eb, int n) {
    const double m = 0.5 * (Ea + Eb);
    const double gap_floor = 8.0 * 2.2e-16 * std::max({1.0, std::fabs(Ea), std::fabs(Eb)});
    auto fl = [&](double tau) {
        const double s = Ea + std::max(tau * tau, gap_floor);
        return 2.0 * density(s) / (I_UNIT * std::sqrt(Eb - s));
    };
    auto fr = [&](double tau) {
        const double s = Eb - std::max(tau * tau, gap_floor);
        return 2.0 * density(s) / (I_UNIT * std::sqrt(s - Ea));
    };
    return integrate_gl(fl, 0.0, std::sqrt(m - Ea), n) +
           integrate_gl(fr, 0.0, std::sqrt(Eb - m), n);
}

// Shared core for the half-line integrals: kernel(s) multiplies density/weight
// with weight(s) = -sqrt(E1-s) cof(s).
static cplx halfline_core(const cplx_fn& density, const cplx_fn& cof,
                          const cplx_fn& kernel, double E1, double tail_cut,
                          double* tail_estimate) {
    const double R0 = 1.0;
    const double s_floor = 8.0 * 2.2e-16 * std::max(1.0, std::fabs(E1));
    // [E1 - R0, E1] in tau = sqrt(E1-s): 2 tau dtau / (-tau cof) = -2 dtau / cof
    auto fnear = [&](double tau) {
        const double s = E1 - std::max(tau * tau, s_floor);
        return -2.0 * density(s) * kernel(s) / cof(s);
    };
    cplx acc = integrate_graded(fnear, 0.0, std::sqrt(R0), true, 44, 24);

    auto weight = [&](double s) { return -std::sqrt(E1 - s) * cof(s); };

    // Doubling panels out to E1 - tail_cut.
    double hi = R0;
    while (hi < tail_cut) {
        const double lo = std::min(2.0 * hi, tail_cut);
        auto f = [&](double s) { return density(s) * kernel(s) / weight(s); };
        acc += integrate_gl(f, E1 - lo, E1 - hi, 32);
        hi = lo;
    }

    // Power-law tail model fitted at two probe points.
    const double s1 = E1 - tail_cut, s2 = E1 - 2.0 * tail_cut;
    const cplx d1 = density(s1), d2 = density(s2);
    cplx tail = 0.0;
    if (std::abs(d1) > 1e-280 && std::abs(d2) > 1e-280) {
        const double p = std::log(std::abs(d1) / std::abs(d2)) /
                         std::log(std::fabs(s2) / std::fabs(s1));
        if (p > 1.0 && p < 40.0) {
            const cplx c = d1 * std::pow(std::fabs(s1), p);
            auto fmodel = [&](double s) {
                return c * std::pow(std::fabs(s), -p) * kernel(s) / weight(s);
            };
            tail = integrate_tail_left(fmodel, s1, 14, 32);
        }
    }
    if (tail_estimate) *tail_estimate = std::abs(tail);
    return acc + tail;
}

cplx cauchy_halfline(const cplx_fn& density, const cplx_fn& cof, double E1, cplx k,
                     double tail_cut, double* tail_estimate) {
    if (k.imag() == 0.0 && k.real() <= E1)
        throw std::invalid_argument("cauchy_halfline: k on the contour");
    auto kernel = [k](double s) { return 1.0 / (s - k); };
    return halfline_core(density, cof, kernel, E1, tail_cut, tail_estimate);
}

cplx halfline_weighted_integral(const cplx_fn& density, const cplx_fn& cof, double E1,
                                double tail_cut, double* tail_estimate) {
    auto kernel = [](double) { return cplx(1.0); };
    return halfline_core(density, cof, kernel, E1, tail_cut, tail_estimate);
}

double stieltjes_dlog(const real_fn& phi, double k0, double tail_cut, double h) {
    auto dphi = [&](double s) { return (phi(s + h) - phi(s - h)) / (2.0 * h); };

    // [k0 - R0, k0]: integrable log singularity of the kernel at k0.
    const double R0 = 1.0;
    auto fnear = [&](double s) { return cplx(std::log(k0 - s) * dphi(s)); };
    cplx acc = integrate_graded(fnear, k0 - R0, k0 - 2.0 * h, false, 40, 20);

    double hi = R0;
    while (hi < tail_cut) {
        const double lo = std::min(2.0 * hi, tail_cut);
        acc += integrate_gl(fnear, k0 - lo, k0 - hi, 32);
        hi = lo;
    }

    // Tail: fit |phi'| ~ c |s|^{-q}.
    const double s1 = k0 - tail_cut, s2 = k0 - 2.0 * tail_cut;
    const double d1 = dphi(s1), d2 = dphi(s2);
    if (std::fabs(d1) > 1e-280 && std::fabs(d2) > 1e-280 && d1 * d2 > 0.0) {
        const double q = std::log(std::fabs(d1) / std::fabs(d2)) /
                         std::log(std::fabs(s2) / std::fabs(s1));
        if (q > 1.0 && q < 40.0) {
            const double c = d1 * std::pow(std::fabs(s1), q);
            auto fmodel = [&](double s) {
                return cplx(std::log(k0 - s) * c * std::pow(std::fabs(s), -q));
            };
            acc += integrate_tail_left(fmodel, s1, 14, 32);
        }
    }
    return acc.real();
}

}  // namespace nls
