#include "nls/datum.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace nls {

InitialDatum pure_step_datum(const Params& p) {
    InitialDatum d;
    const double alpha = p.alpha, beta = p.beta;
    d.profile = [alpha, beta](double x) -> cplx {
        if (x < 0.0) return alpha * std::exp(cplx(0.0, 2.0 * beta * x));
        return 0.0;
    };
    d.x_min = 0.0;
    d.x_max = 0.0;
    d.tail_tol = 0.0;
    d.N1 = 8;
    d.N2 = 0;  // discontinuous
    d.scale = 1e30;
    return d;
}

InitialDatum tanh_step_datum(const Params& p, double width, double tail_tol) {
    if (!(width > 0.0)) throw std::invalid_argument("tanh_step_datum: width must be > 0");
    InitialDatum d;
    const double alpha = p.alpha, beta = p.beta, w = width;
    d.profile = [alpha, beta, w](double x) -> cplx {
        return alpha * std::exp(cplx(0.0, 2.0 * beta * x)) * 0.5 * (1.0 - std::tanh(x / w));
    };
    // |u0 - u0^b| = alpha (1+tanh(x/w))/2 ~ alpha e^{2x/w} on the left tail.
    const double xr = 0.5 * w * std::log(alpha / tail_tol) + w;
    d.x_min = -xr;
    d.x_max = xr;
    d.tail_tol = tail_tol;
    d.N1 = 8;
    d.N2 = 3;
    d.scale = w;
    return d;
}

InitialDatum sampled_datum(const Params& p, std::vector<double> x, std::vector<cplx> u,
                           double tail_tol) {
    if (x.size() != u.size() || x.size() < 4)
        throw std::invalid_argument("sampled_datum: need >= 4 matching samples");
    for (size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            throw std::invalid_argument("sampled_datum: x must be strictly ascending");
    InitialDatum d;
    const double alpha = p.alpha, beta = p.beta;
    double minstep = 1e30;
    for (size_t i = 1; i < x.size(); ++i) minstep = std::min(minstep, x[i] - x[i - 1]);
    auto xs = std::make_shared<std::vector<double>>(std::move(x));
    auto us = std::make_shared<std::vector<cplx>>(std::move(u));
    d.profile = [xs, us, alpha, beta](double xq) -> cplx {
        const auto& X = *xs;
        const auto& U = *us;
        if (xq <= X.front()) return alpha * std::exp(cplx(0.0, 2.0 * beta * xq));
        if (xq >= X.back()) return 0.0;
        auto it = std::upper_bound(X.begin(), X.end(), xq);
        size_t i = static_cast<size_t>(it - X.begin()) - 1;
        if (i + 1 >= X.size()) i = X.size() - 2;
        const double h = X[i + 1] - X[i];
        const double t = (xq - X[i]) / h;
        // Catmull-Rom tangents, one-sided at the ends
        const cplx m0 = (i == 0) ? (U[1] - U[0]) : 0.5 * (U[i + 1] - U[i - 1]);
        const cplx m1 = (i + 2 >= U.size()) ? (U[i + 1] - U[i])
                                            : 0.5 * (U[i + 2] - U[i]);
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * U[i] + (t3 - 2 * t2 + t) * m0 +
               (-2 * t3 + 3 * t2) * U[i + 1] + (t3 - t2) * m1;
    };
    d.x_min = xs->front();
    d.x_max = xs->back();
    d.tail_tol = tail_tol;
    d.N1 = 2;
    d.N2 = 0;
    d.scale = minstep * 4.0;
    return d;
}

}  // namespace nls
