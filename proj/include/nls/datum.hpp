#pragma once

#include <functional>
#include <vector>

#include "nls/background.hpp"

namespace nls {

// Step-like initial data: u0 ~ alpha e^{2i beta x} as x -> -inf, u0 -> 0 as
// x -> +inf. The transition region is [x_min, x_max]; outside it the profile
// agrees with the background / zero models to tail_tol.
struct InitialDatum {
    std::function<cplx(double)> profile;
    double x_min = 0.0;
    double x_max = 0.0;
    double tail_tol = 0.0;
    int N1 = 8;
    int N2 = 3;
    double scale = 1.0;  // shortest x-scale of the profile; caps the march step
};

// u0(x) = alpha e^{2i beta x} for x < 0, 0 for x >= 0. The transition window
// is empty, so Jost marching is exact.
InitialDatum pure_step_datum(const Params& p);

// u0(x) = alpha e^{2i beta x} (1 - tanh(x/w))/2; smooth with exponentially
// settled tails.
InitialDatum tanh_step_datum(const Params& p, double width, double tail_tol = 1e-10);

// Profile interpolated from samples (x ascending); cubic Hermite between
// nodes, background/zero models outside the sampled range.
InitialDatum sampled_datum(const Params& p, std::vector<double> x, std::vector<cplx> u,
                           double tail_tol = 1e-8);

}  // namespace nls
