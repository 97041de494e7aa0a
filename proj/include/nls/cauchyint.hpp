#pragma once

#include <functional>
#include <vector>

#include "nls/quadrature.hpp"

namespace nls {

using real_fn = std::function<double(double)>;
using cplx_fn = std::function<cplx(double)>;

// Endpoint expansion of f0(z) = int_a^b g0(s)/sqrt(b-s) ds/(s-z) near z = b:
//   f0(z) = -pi * sum_n sing[n] (z-b)^{n-1/2} + sum_n reg[n] (z-b)^n + o((z-b)^{N-1/2})
// with sing[n] = g0^{(n)}(b)/n! for n = 0..N and reg[n] for n = 0..N-1.
struct EndpointExpansion {
    std::vector<cplx> singular_coeffs;  // g0^{(n)}(b)/n!, n = 0..N (sign -pi applied in eval)
    std::vector<cplx> regular_coeffs;   // f_{0,n}, n = 0..N-1
    double a, b;
    int order;

    cplx evaluate(cplx z) const;  // truncated expansion at z near b
};

// f0(z) = int_a^b g0(s)/sqrt(b-s) ds/(s-z), z off (-inf, b].
// Near-field z (dist to [a,b] below 0.05(b-a)) is handled by subtracting the
// first two Taylor terms of g0 about the foot point against closed forms.
cplx cauchy_sqrt_endpoint(const cplx_fn& g0, double a, double b, cplx z);

// Closed form of the pure-weight integral int_a^b (b-s)^{-1/2} ds/(s-z).
cplx cauchy_sqrt_endpoint_weight(double a, double b, cplx z);

// Expansion coefficients per the iterated difference-quotient construction.
// derivs_at_b must contain g0^{(m)}(b) for m = 0..M with M >= N; extra
// derivatives stabilize the quotient evaluation near s = b.
EndpointExpansion endpoint_expansion(const cplx_fn& g0, const std::vector<cplx>& derivs_at_b,
                                     double a, double b, int N);

// int_{Ea}^{Eb} density(s) / (Xplus(s) (s-k)) ds with Xplus(s) = i sqrt((s-Ea)(Eb-s)),
// k off [Ea,Eb]. Split at the midpoint, Gauss-Jacobi on each half; near-field k
// subtracts density(foot)*[pi i / Xc(k)] with Xc(k) = sqrt(k-Ea) sqrt(k-Eb).
cplx cauchy_cut_weighted(const cplx_fn& density, double Ea, double Eb, cplx k, int n = 96);

// Same weight, no Cauchy kernel: int_{Ea}^{Eb} density(s)/Xplus(s) ds.
cplx cut_weighted_integral(const cplx_fn& density, double Ea, double Eb, int n = 96);

// int_{-inf}^{E1} density(s) / (weight(s) (s-k)) ds for a weight of the form
//   weight(s) = -sqrt(E1 - s) * cof(s),
// the shape X and script-X take on the half-line (negative there); cof is the
// smooth cofactor, e.g. sqrt(E2 - s). The sqrt factor is cancelled against
// the s = E1 - tau^2 substitution analytically, so the density may carry a
// c*log(E1-s) singularity and the endpoint needs no special casing. The tail
// is truncated at E1 - tail_cut with a fitted power-law model beyond; the
// model contribution is returned in tail_estimate when non-null.
cplx cauchy_halfline(const cplx_fn& density, const cplx_fn& cof, double E1, cplx k,
                     double tail_cut = 64.0, double* tail_estimate = nullptr);

// int_{-inf}^{E1} density(s)/weight(s) ds (no pole), same weight convention.
cplx halfline_weighted_integral(const cplx_fn& density, const cplx_fn& cof, double E1,
                                double tail_cut = 64.0, double* tail_estimate = nullptr);

// Stieltjes integral int_{-inf}^{k0} log(k0 - s) d log(1 - |r(s)|^2), with
// phi(s) = log(1-|r(s)|^2) supplied; derivative by centered differences.
double stieltjes_dlog(const real_fn& log_one_minus_r2, double k0, double tail_cut = 64.0,
                      double fd_step = 1e-5);

}  // namespace nls
