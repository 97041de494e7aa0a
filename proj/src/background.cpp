#include "nls/background.hpp"

#include <cmath>

namespace nls {

Params make_params(double alpha, double beta, double delta) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("make_params: alpha must be positive (alpha=" +
                                    std::to_string(alpha) + ")");
    if (!(delta > 0.0) || !(delta < alpha))
        throw std::invalid_argument("make_params: delta must lie in (0, alpha)");
    Params p;
    p.alpha = alpha;
    p.beta = beta;
    p.omega = -4.0 * beta * beta - 2.0 * alpha * alpha;
    p.E1 = -beta - alpha;
    p.E2 = -beta + alpha;
    p.delta = delta;
    return p;
}

cplx plane_wave(const Params& p, double x, double t) {
    return p.alpha * std::exp(cplx(0.0, 2.0 * p.beta * x + p.omega * t));
}

static void check_cut_args(const Params& p, const cplx& k, Side side, const char* who) {
    if (side == Side::interior) {
        if (k.imag() == 0.0 && k.real() >= p.E1 && k.real() <= p.E2)
            throw std::invalid_argument(std::string(who) +
                                        ": interior evaluation on the cut [E1,E2]");
    } else {
        if (k.imag() != 0.0 || k.real() <= p.E1 || k.real() >= p.E2)
            throw std::invalid_argument(std::string(who) +
                                        ": boundary value requested off the open cut");
    }
}

// Product of principal square roots has its cut exactly on [E1,E2] and the
// branch with X ~ k at infinity; on the cut the upper boundary value is
// X+ = i sqrt((k-E1)(E2-k)).
cplx X_branch(const Params& p, cplx k, Side side) {
    check_cut_args(p, k, side, "X");
    if (side == Side::interior)
        return std::sqrt(k - p.E1) * std::sqrt(k - p.E2);
    const double kr = k.real();
    const cplx xp = cplx(0.0, 1.0) * std::sqrt((kr - p.E1) * (p.E2 - kr));
    return side == Side::plus ? xp : -xp;
}

cplx Omega_branch(const Params& p, cplx k, Side side) {
    return 2.0 * (k - p.beta) * X_branch(p, k, side);
}

cplx Delta_branch(const Params& p, cplx k, Side side) {
    if (side == Side::interior) {
        check_cut_args(p, k, side, "Delta");
        if (k == cplx(p.E1)) throw std::invalid_argument("Delta: pole at k = E1");
        // (k-E2)/(k-E1) maps C \ [E1,E2] onto C \ (-inf,0]; principal power.
        return std::pow((k - p.E2) / (k - p.E1), 0.25);
    }
    check_cut_args(p, k, side, "Delta");
    const double kr = k.real();
    const double rho = std::pow((p.E2 - kr) / (kr - p.E1), 0.25);
    const double ph = (side == Side::plus) ? M_PI / 4.0 : -M_PI / 4.0;
    return rho * std::exp(cplx(0.0, ph));
}

Mat2 s_b(const Params& p, cplx k, Side side) {
    const cplx d = Delta_branch(p, k, side);
    const cplx sum = 0.5 * (d + 1.0 / d);
    const cplx dif = 0.5 * (d - 1.0 / d);
    const cplx i(0.0, 1.0);
    return {sum, i * dif, -i * dif, sum};
}

Mat2 phi1_b(const Params& p, double x, double t, cplx k, Side side) {
    const cplx left = cplx(0.0, 1.0) * (p.beta * x + 0.5 * p.omega * t);
    const cplx right = -cplx(0.0, 1.0) *
                       (X_branch(p, k, side) * x + Omega_branch(p, k, side) * t);
    return expsigma3_left(left, expsigma3_right(s_b(p, k, side), right));
}

Sector classify_sector(const Params& p, double x, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("classify_sector: t must be positive");
    const double xi = x / t;
    const double bLM = 4.0 * p.beta - 2.0 * p.alpha;
    const double bMR = 4.0 * p.beta + 4.0 * p.alpha;
    if (xi <= bLM - p.delta) return Sector::Left;
    if (xi < bLM + p.delta) return Sector::TransitionLM;
    if (xi <= bMR - p.delta) return Sector::Middle;
    if (xi < bMR + p.delta) return Sector::TransitionMR;
    return Sector::Right;
}

const char* sector_name(Sector s) {
    switch (s) {
        case Sector::Left: return "left";
        case Sector::Middle: return "middle";
        case Sector::Right: return "right";
        case Sector::TransitionLM: return "transition_lm";
        default: return "transition_mr";
    }
}

}  // namespace nls
