#pragma once

#include <stdexcept>
#include <string>

#include "nls/matrix2.hpp"

namespace nls {

// Problem constants for the step-like background  alpha e^{2i beta x + i omega t}.
// omega, E1, E2 are derived; delta is the half-width of the transition bands
// excluded around the sector boundaries xi = 4b-2a and xi = 4b+4a.
struct Params {
    double alpha;
    double beta;
    double omega;
    double E1;
    double E2;
    double delta;
};

enum class Side { interior, plus, minus };

enum class Sector { Left, Middle, Right, TransitionLM, TransitionMR };

Params make_params(double alpha, double beta, double delta = 0.25);

// Plane wave solution alpha e^{i(2 beta x + omega t)}.
cplx plane_wave(const Params& p, double x, double t);

// X(k) = sqrt((k-E1)(k-E2)), cut on [E1,E2], X ~ k + beta at infinity.
// side selects the boundary value for k on the open cut.
cplx X_branch(const Params& p, cplx k, Side side = Side::interior);

// Omega(k) = 2(k - beta) X(k) = 2k^2 + omega/2 + O(1/k).
cplx Omega_branch(const Params& p, cplx k, Side side = Side::interior);

// Delta(k) = ((k-E2)/(k-E1))^{1/4}, cut on [E1,E2], -> 1 at infinity.
cplx Delta_branch(const Params& p, cplx k, Side side = Side::interior);

// Background scattering matrix, det = 1:
//   s^b = 1/2 [ D+1/D   i(D-1/D) ; -i(D-1/D)   D+1/D ],  D = Delta(k).
Mat2 s_b(const Params& p, cplx k, Side side = Side::interior);

// Explicit background eigenfunction
//   phi1^b(x,t,k) = e^{i(beta x + omega t/2) sigma3} s^b(k) e^{-i(X x + Omega t) sigma3}.
Mat2 phi1_b(const Params& p, double x, double t, cplx k, Side side = Side::interior);

// Classify xi = x/t against the sector intervals, delta-bands are first-class.
Sector classify_sector(const Params& p, double x, double t);

const char* sector_name(Sector s);

}  // namespace nls
