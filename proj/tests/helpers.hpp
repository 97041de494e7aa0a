#pragma once

#include <cmath>
#include <complex>
#include <functional>

#include "doctest.h"
#include "nls/matrix2.hpp"

namespace testutil {

using nls::cplx;

inline double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// centered difference in a real parameter of a complex-valued function
inline cplx fd_derivative(const std::function<cplx(double)>& f, double x,
                          double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline cplx fd_second(const std::function<cplx(double)>& f, double x, double h = 1e-4) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// least-squares slope of log|y| against log x
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double mat_dist(const nls::Mat2& a, const nls::Mat2& b) {
    return (a - b).norm();
}

}  // namespace testutil
