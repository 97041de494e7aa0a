#include "nls/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "nls/specfun.hpp"

namespace nls {

static const cplx I_UNIT(0.0, 1.0);

static double middle_k0(const Params& p, double xi) {
    return (p.beta + p.alpha - xi) / 3.0;
}

static void require_middle(const Params& p, double xi, const char* who) {
    const double lo = 4.0 * p.beta - 2.0 * p.alpha, hi = 4.0 * p.beta + 4.0 * p.alpha;
    if (!(xi > lo && xi < hi))
        throw std::invalid_argument(std::string(who) + ": xi outside the middle cone");
}

cplx scriptX(const Params& p, double xi, cplx k, Side side) {
    const double k0 = middle_k0(p, xi);
    if (side == Side::interior) {
        if (k.imag() == 0.0 && k.real() >= p.E1 && k.real() <= k0)
            throw std::invalid_argument("scriptX: interior evaluation on [E1,k0]");
        return std::sqrt(k - p.E1) * std::sqrt(k - k0);
    }
    const double kr = k.real();
    const cplx v = I_UNIT * std::sqrt((kr - p.E1) * (k0 - kr));
    return side == Side::plus ? v : -v;
}

cplx g_middle(const Params& p, double xi, cplx k, Side side) {
    require_middle(p, xi, "g_middle");
    const double k0 = middle_k0(p, xi);
    if (k == cplx(p.E1) || k == cplx(k0))
        throw std::invalid_argument("g_middle: k at a branch point");
    return 2.0 * (k - k0) * scriptX(p, xi, k, side);
}

// densities shared by the Cauchy integrals
static cplx_fn density_log1m(const ScatteringData& r) {
    return [&r](double s) { return cplx(r.log1m_r2(s)); };
}
static cplx_fn density_logr(const ScatteringData& r, int shift) {
    const double off = 2.0 * M_PI * shift;
    return [&r, off](double s) { return I_UNIT * (r.argr_unwrapped(s) + off); };
}

cplx scriptD(const Params& p, const ScatteringData& r, double xi, cplx k,
             const AsympOptions& opt) {
    require_middle(p, xi, "scriptD");
    const double k0 = middle_k0(p, xi);
    if (k.imag() == 0.0 && k.real() <= k0)
        throw std::invalid_argument("scriptD: k on (-inf, k0]");
    auto cof = [&](double s) { return cplx(std::sqrt(k0 - s)); };
    const cplx A = cauchy_halfline(density_log1m(r), cof, p.E1, k, r.K_max);
    const cplx B = cauchy_cut_weighted(density_logr(r, opt.logr_branch_shift), p.E1, k0, k);
    return std::exp(scriptX(p, xi, k) / (2.0 * M_PI * I_UNIT) * (A + B));
}

// bracketed difference-quotient integral entering C_k0, density G(s);
// G(s) = dens(s)/sqrt(s-E1), quotient against its value at k0.
static cplx ck0_bracket(const Params& p, double k0, const cplx_fn& dens, cplx dens_k0) {
    const cplx Gk0 = dens_k0 / std::sqrt(k0 - p.E1);
    const double m = 0.5 * (p.E1 + k0);
    const double gap = 8.0 * 2.2e-16 * std::max(1.0, std::fabs(p.E1));
    // tau = sqrt(s - E1) on the left half: the density's sqrt expansion at E1
    // becomes smooth in tau
    auto fl = [&](double tau) {
        const double s = p.E1 + std::max(tau * tau, gap);
        return 2.0 * (dens(s) - Gk0 * tau) / ((s - k0) * std::sqrt(k0 - s));
    };
    auto fr = [&](double s) {  // weight (k0-s)^{-1/2}; smooth quotient at k0
        return (dens(s) / std::sqrt(s - p.E1) - Gk0) / (s - k0);
    };
    return integrate_gl(fl, 0.0, std::sqrt(m - p.E1), 96) +
           integrate_inv_sqrt_right(fr, m, k0, 96) + 2.0 * dens_k0 / (k0 - p.E1);
}

MiddleQuantities middle_quantities(const Params& p, const ScatteringData& r, double xi,
                                   const AsympOptions& opt) {
    require_middle(p, xi, "middle_quantities");
    MiddleQuantities q;
    q.xi = xi;
    q.k0 = middle_k0(p, xi);
    q.g_inf = (xi * xi - 4.0 * p.E1 * xi - 8.0 * p.E1 * p.E1) / 12.0;

    auto cof = [&](double s) { return cplx(std::sqrt(q.k0 - s)); };
    auto logr = density_logr(r, opt.logr_branch_shift);

    double tail1 = 0.0, tail2 = 0.0;
    const cplx A_k0 = cauchy_halfline(density_log1m(r), cof, p.E1, q.k0, r.K_max, &tail1);
    const cplx logr_k0 = logr(q.k0);
    const cplx bracket = ck0_bracket(p, q.k0, logr, logr_k0);
    q.C_k0 = std::sqrt(q.k0 - p.E1) / (2.0 * M_PI) * (I_UNIT * A_k0 + bracket);

    const cplx Ainf =
        halfline_weighted_integral(density_log1m(r), cof, p.E1, r.K_max, &tail2);
    const cplx Binf = cut_weighted_integral(logr, p.E1, q.k0);
    q.Dinf = std::exp(-(Ainf + Binf) / (2.0 * M_PI * I_UNIT));
    q.quad_err = tail1 + tail2;
    return q;
}

UValue u_middle(const Params& p, const ScatteringData& r, double x, double t,
                const AsympOptions& opt) {
    if (classify_sector(p, x, t) != Sector::Middle)
        throw std::invalid_argument("u_middle: (x,t) not in the middle sector");
    const double xi = x / t;
    const MiddleQuantities q = middle_quantities(p, r, xi, opt);
    const cplx Dm2 = 1.0 / (q.Dinf * q.Dinf);
    const cplx phase = Dm2 * std::exp(2.0 * I_UNIT * t * q.g_inf);
    UValue u;
    u.leading = -phase * (4.0 * (p.alpha + p.beta) - xi) / 6.0;
    const double dk = q.k0 - p.E1;
    const cplx br = 12.0 * q.C_k0 * q.C_k0 - 24.0 / std::sqrt(dk) * q.C_k0 + 7.0 / dk;
    u.correction = -phase * br / (144.0 * I_UNIT * t);
    return u;
}

// ---------------------------------------------------------------------------
// left sector

static double left_k0(const Params& p, double xi) {
    const double h = (4.0 * p.beta - xi) / 8.0;
    return -(4.0 * p.beta + xi) / 8.0 + std::sqrt(0.5 * p.alpha * p.alpha + h * h);
}

static void require_left(const Params& p, double xi, const char* who) {
    if (!(xi < 4.0 * p.beta - 2.0 * p.alpha))
        throw std::invalid_argument(std::string(who) + ": xi outside the left cone");
}

// int_{E2}^{k0} of v(s) = log(1-|r|^2)/X(s); log-singular at E2.
static cplx left_B_plain(const Params& p, const ScatteringData& r, double k0) {
    const double gap = 8.0 * 2.2e-16 * std::max(1.0, std::fabs(p.E2));
    auto f = [&](double tau) {  // s = E2 + tau^2
        const double s = p.E2 + std::max(tau * tau, gap);
        return 2.0 * r.log1m_r2(s) / std::sqrt(s - p.E1);
    };
    return integrate_graded(f, 0.0, std::sqrt(k0 - p.E2), true, 44, 24);
}

// int_{E2}^{k0} (v(s) - v(k0))/(s - k0) ds
static cplx left_B_reg(const Params& p, const ScatteringData& r, double k0) {
    auto v = [&](double s) {
        return r.log1m_r2(s) / std::sqrt((s - p.E1) * (s - p.E2));
    };
    const cplx vk0 = v(k0);
    const double m = 0.5 * (p.E2 + k0);
    const double gap = 8.0 * 2.2e-16 * std::max(1.0, std::fabs(p.E2));
    auto fl = [&](double tau) {  // s = E2 + tau^2, graded at E2
        const double s = p.E2 + std::max(tau * tau, gap);
        return 2.0 * tau * (v(s) - vk0) / (s - k0);
    };
    auto fr = [&](double s) { return (v(s) - vk0) / (s - k0); };
    return integrate_graded(fl, 0.0, std::sqrt(m - p.E2), true, 40, 24) +
           integrate_graded(fr, m, k0 - 1e-9, false, 36, 24);
}

cplx left_D(const Params& p, const ScatteringData& r, double xi, cplx k,
            const AsympOptions& opt) {
    require_left(p, xi, "left_D");
    const double k0 = left_k0(p, xi);
    if (k.imag() == 0.0 && k.real() <= k0 && k.real() >= p.E1)
        throw std::invalid_argument("left_D: k on the contour");
    auto cofX = [&](double s) { return cplx(std::sqrt(p.E2 - s)); };
    const cplx A = cauchy_halfline(density_log1m(r), cofX, p.E1, k, r.K_max);
    auto vker = [&](double s) {
        return r.log1m_r2(s) / (std::sqrt((s - p.E1) * (s - p.E2)) * (s - k));
    };
    const double gapB = 8.0 * 2.2e-16 * std::max(1.0, std::fabs(p.E2));
    auto fB = [&](double tau) {
        const double s = p.E2 + std::max(tau * tau, gapB);
        return 2.0 * tau * vker(s);
    };
    const cplx B = integrate_graded(fB, 0.0, std::sqrt(k0 - p.E2), true, 44, 24);
    const cplx C =
        cauchy_cut_weighted(density_logr(r, opt.logr_branch_shift), p.E1, p.E2, k);
    const cplx Xk = X_branch(p, k);
    return std::exp(Xk / (2.0 * M_PI * I_UNIT) * (A + B + C));
}

LeftQuantities left_quantities(const Params& p, const ScatteringData& r, double xi,
                               const AsympOptions& opt) {
    require_left(p, xi, "left_quantities");
    LeftQuantities q;
    q.xi = xi;
    q.k0 = left_k0(p, xi);
    const cplx rk0 = r.r_at(q.k0);
    q.nu = -std::log1p(-std::norm(rk0)) / (2.0 * M_PI);
    const double Xk0 = std::sqrt((q.k0 - p.E1) * (q.k0 - p.E2));
    q.g_k0 = (2.0 * q.k0 - 2.0 * p.beta + xi) * Xk0;
    const double h = (4.0 * p.beta - xi) / 8.0;
    q.psi_k0 = 2.0 * std::sqrt(2.0) *
               std::pow(0.5 * p.alpha * p.alpha + h * h, 0.25) / std::sqrt(Xk0);

    auto cofX = [&](double s) { return cplx(std::sqrt(p.E2 - s)); };
    auto logr = density_logr(r, opt.logr_branch_shift);

    double tail1 = 0.0;
    const cplx Ainf =
        halfline_weighted_integral(density_log1m(r), cofX, p.E1, r.K_max, &tail1);
    const cplx Binf = left_B_plain(p, r, q.k0);
    const cplx Cinf = cut_weighted_integral(logr, p.E1, p.E2);
    q.Dinf = std::exp(-(Ainf + Binf + Cinf) / (2.0 * M_PI * I_UNIT));

    const cplx A_k0 = cauchy_halfline(density_log1m(r), cofX, p.E1, q.k0, r.K_max);
    const cplx B_reg = left_B_reg(p, r, q.k0);
    const cplx C_k0 = cauchy_cut_weighted(logr, p.E1, p.E2, q.k0);
    const cplx vk0 = cplx(r.log1m_r2(q.k0)) / Xk0;
    const cplx logDb = Xk0 / (2.0 * M_PI * I_UNIT) * (A_k0 + B_reg + C_k0) -
                       Xk0 * vk0 / (2.0 * M_PI * I_UNIT) * std::log(q.k0 - p.E2);
    q.Db_k0 = std::exp(logDb);

    if (q.nu < 1e-12) {
        q.betaX = 0.0;
    } else {
        const double argG = log_gamma(I_UNIT * q.nu).imag();
        q.betaX = std::sqrt(q.nu) *
                  std::exp(I_UNIT * (0.75 * M_PI - std::arg(-rk0) + argG));
    }
    q.quad_err = tail1;
    return q;
}

UValue u_left(const Params& p, const ScatteringData& r, double x, double t,
              const AsympOptions& opt) {
    if (classify_sector(p, x, t) != Sector::Left)
        throw std::invalid_argument("u_left: (x,t) not in the left sector");
    const double xi = x / t;
    const LeftQuantities q = left_quantities(p, r, xi, opt);
    const cplx Dm2 = 1.0 / (q.Dinf * q.Dinf);
    const cplx wave = std::exp(I_UNIT * (2.0 * p.beta * x + p.omega * t));
    UValue u;
    u.leading = -Dm2 * p.alpha * wave;

    const cplx d2 = Delta_branch(p, q.k0) * Delta_branch(p, q.k0);
    const cplx tpiv = std::exp(-I_UNIT * q.nu * std::log(t));
    const cplx e2itg = std::exp(2.0 * I_UNIT * t * q.g_k0);
    const cplx psi_p = q.psi_k0 * std::exp(2.0 * I_UNIT * q.nu * std::log(q.psi_k0));
    const cplx Db2 = q.Db_k0 * q.Db_k0;
    const cplx term1 = I_UNIT * tpiv * q.betaX * (d2 + 1.0) * (d2 + 1.0) /
                       (2.0 * e2itg * d2 * psi_p / Db2);
    const cplx term2 = I_UNIT * std::conj(q.betaX) / tpiv * (d2 - 1.0) * (d2 - 1.0) /
                       (2.0 * d2 * std::conj(psi_p) * Db2 / e2itg);
    u.correction = -Dm2 * wave * (term1 + term2) / std::sqrt(t);
    return u;
}

cplx ux_left(const Params& p, const ScatteringData& r, double x, double t,
             const AsympOptions& opt) {
    if (classify_sector(p, x, t) != Sector::Left)
        throw std::invalid_argument("ux_left: (x,t) not in the left sector");
    const LeftQuantities q = left_quantities(p, r, x / t, opt);
    const cplx Dm2 = 1.0 / (q.Dinf * q.Dinf);
    return -Dm2 * 2.0 * I_UNIT * p.beta * p.alpha *
           std::exp(I_UNIT * (2.0 * p.beta * x + p.omega * t));
}

// ---------------------------------------------------------------------------
// J and the right sector

JResult J_integral(const Params& p, const ScatteringData& r) {
    auto cofX = [&](double s) { return cplx(std::sqrt(p.E2 - s)); };
    double tail1 = 0.0;
    const cplx p1 =
        halfline_weighted_integral(density_log1m(r), cofX, p.E1, r.K_max, &tail1);

    // int_{E2}^{+inf}: tau grading at E2, doubling panels, fitted tail model.
    const double gap2 = 8.0 * 2.2e-16 * std::max(1.0, std::fabs(p.E2));
    auto f2 = [&](double tau) {
        const double s = p.E2 + std::max(tau * tau, gap2);
        return 2.0 * r.log1m_r2(s) / std::sqrt(s - p.E1);
    };
    cplx p2 = integrate_graded(f2, 0.0, 1.0, true, 44, 24);
    auto fmid = [&](double s) {
        return cplx(r.log1m_r2(s) / std::sqrt((s - p.E1) * (s - p.E2)));
    };
    double hi = 1.0;
    while (p.E2 + hi < p.E2 + r.K_max) {
        const double lo = std::min(2.0 * hi, r.K_max);
        p2 += integrate_gl(fmid, p.E2 + hi, p.E2 + lo, 32);
        hi = lo;
    }
    double tail2 = 0.0;
    {
        const double s1 = p.E2 + r.K_max, s2 = p.E2 + 2.0 * r.K_max;
        const double d1 = r.log1m_r2(s1), d2v = r.log1m_r2(s2);
        if (std::fabs(d1) > 1e-280 && std::fabs(d2v) > 1e-280 && d1 * d2v > 0.0) {
            const double q = std::log(std::fabs(d1) / std::fabs(d2v)) /
                             std::log(std::fabs(s2) / std::fabs(s1));
            if (q > 1.0 && q < 40.0) {
                const double c = d1 * std::pow(std::fabs(s1), q);
                auto fmodel = [&](double s) {
                    return cplx(c * std::pow(std::fabs(s), -q) /
                                std::sqrt((s - p.E1) * (s - p.E2)));
                };
                const cplx t2 = integrate_tail_right(fmodel, s1, 14, 32);
                p2 += t2;
                tail2 = std::abs(t2);
            }
        }
    }

    const cplx p3 = cut_weighted_integral(density_logr(r, 0), p.E1, p.E2);

    JResult out;
    out.J = (p1 + p2 + p3).real();
    const double ratio = out.J / (M_PI * M_PI);
    out.parity = 2 * static_cast<int>(std::lround((ratio - 1.0) / 2.0)) + 1;
    out.residual = std::fabs(ratio - out.parity);
    out.tail_err = tail1 + tail2;
    return out;
}

double RightQuantities::phi(double t) const {
    return (3.0 * M_PI + xi * xi * t) / 4.0 - arg_minus_r + arg_gamma -
           nu_hat * std::log(8.0 * t) + stieltjes / M_PI;
}

RightQuantities right_quantities(const Params& p, const ScatteringData& r, double xi) {
    if (!(xi > 4.0 * p.beta + 4.0 * p.alpha))
        throw std::invalid_argument("right_quantities: xi outside the right cone");
    RightQuantities q;
    q.xi = xi;
    q.k0 = -xi / 4.0;
    const cplx rk0 = r.r_at(q.k0);
    if (std::abs(rk0) < 1e-9) {  // marching noise floor
        q.amplitude_zero = true;
        return q;
    }
    q.nu_hat = -std::log1p(-std::norm(rk0)) / (2.0 * M_PI);
    q.arg_minus_r = std::arg(-rk0);
    q.arg_gamma = log_gamma(I_UNIT * q.nu_hat).imag();
    auto phi_fn = [&](double s) { return r.log1m_r2(s); };
    q.stieltjes = stieltjes_dlog(phi_fn, q.k0, r.K_max);
    return q;
}

cplx u_right(const Params& p, const ScatteringData& r, double x, double t) {
    if (classify_sector(p, x, t) != Sector::Right)
        throw std::invalid_argument("u_right: (x,t) not in the right sector");
    const RightQuantities q = right_quantities(p, r, x / t);
    if (q.amplitude_zero) return 0.0;
    return -2.0 * I_UNIT / std::sqrt(8.0 * t) * std::sqrt(q.nu_hat) *
           std::exp(I_UNIT * q.phi(t));
}

// ---------------------------------------------------------------------------

Mat2 global_parametrix(const Params& p, double xi, cplx k, Side side) {
    require_middle(p, xi, "global_parametrix");
    const double k0 = middle_k0(p, xi);
    if (k == cplx(p.E1) || k == cplx(k0))
        throw std::invalid_argument("global_parametrix: k at a branch point");
    cplx d0;
    if (side == Side::interior) {
        if (k.imag() == 0.0 && k.real() > p.E1 && k.real() < k0)
            throw std::invalid_argument("global_parametrix: need a side on the cut");
        d0 = std::pow((k - k0) / (k - p.E1), 0.25);
    } else {
        const double kr = k.real();
        const double rho = std::pow((k0 - kr) / (kr - p.E1), 0.25);
        d0 = rho * std::exp(cplx(0.0, side == Side::plus ? M_PI / 4.0 : -M_PI / 4.0));
    }
    const cplx sum = 0.5 * (d0 + 1.0 / d0), dif = 0.5 * (d0 - 1.0 / d0);
    return {sum, -I_UNIT * dif, I_UNIT * dif, sum};
}

Mat2 subleading_residue(const Params& p, const ScatteringData& r, double xi,
                        const AsympOptions& opt) {
    const MiddleQuantities q = middle_quantities(p, r, xi, opt);
    const cplx C = q.C_k0;
    const double dk = q.k0 - p.E1;
    const cplx c12 = 12.0 * C * C;
    const cplx cc = 24.0 / std::sqrt(dk) * C;
    const cplx c7 = 7.0 / dk;
    Mat2 m{I_UNIT * (c12 - c7), c12 - cc + c7, c12 + cc + c7, -I_UNIT * (c12 - c7)};
    return m * cplx(1.0 / 288.0);
}

HalflineFamily halfline_family(double alpha, double omega) {
    if (!(alpha > 0.0)) throw std::invalid_argument("halfline_family: alpha > 0 required");
    if (!(omega < -3.0 * alpha * alpha))
        throw std::invalid_argument("halfline_family: omega must be < -3 alpha^2");
    HalflineFamily f;
    const double root = std::sqrt(-2.0 * alpha * alpha - omega);
    f.c = I_UNIT * alpha * root;
    f.beta = 0.5 * root;
    return f;
}

MatchingReport matching_report(const Params& p, const ScatteringData& r) {
    MatchingReport rep;
    const double bL = 4.0 * p.beta - 2.0 * p.alpha;
    const double bR = 4.0 * p.beta + 4.0 * p.alpha;
    auto modulus = [&](double xi) {
        const MiddleQuantities q = middle_quantities(p, r, xi);
        return std::abs(1.0 / (q.Dinf * q.Dinf)) * (4.0 * (p.alpha + p.beta) - xi) / 6.0;
    };
    // Richardson on a halving offset sequence: f(b + s) = f(b) + c s + ...
    auto extrapolate = [&](double bnd, double sgn) {
        const double s0 = 0.2 * p.alpha;
        const double f1 = modulus(bnd + sgn * s0);
        const double f2 = modulus(bnd + sgn * s0 * 0.5);
        return 2.0 * f2 - f1;
    };
    rep.modulus_limit_left = extrapolate(bL, +1.0);
    rep.modulus_limit_right = extrapolate(bR, -1.0);
    rep.residual_left = std::fabs(rep.modulus_limit_left - p.alpha);
    rep.residual_right = std::fabs(rep.modulus_limit_right);
    return rep;
}

}  // namespace nls
