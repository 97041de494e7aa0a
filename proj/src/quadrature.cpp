#include "nls/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace nls {

// Eigenvalues and first eigenvector components of a symmetric tridiagonal
// matrix by the implicit QL method with Wilkinson shifts. d = diagonal,
// e = subdiagonal (e[0] unused on input), z = first row of the rotation
// product, initialized to e1.
static void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                       std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw std::runtime_error("tridiag_ql: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

static QuadRule golub_welsch(int n, const std::function<void(int, double&, double&)>& rec,
                             double mu0) {
    std::vector<double> d(n), e(n), z(n, 0.0);
    z[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        double a, b;
        rec(i, a, b);
        d[i] = a;
        if (i > 0) e[i] = b;  // sqrt(beta_i), placed as subdiagonal
    }
    tridiag_ql(d, e, z);
    // sort ascending
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
    QuadRule q;
    q.nodes.resize(n);
    q.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        q.nodes[i] = d[idx[i]];
        q.weights[i] = mu0 * z[idx[i]] * z[idx[i]];
    }
    return q;
}

static double lgamma_d(double x) { return std::lgamma(x); }

const QuadRule& gauss_jacobi(int n, double a, double b) {
    static std::map<std::tuple<int, double, double>, QuadRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const double mu0 =
        std::exp((a + b + 1.0) * std::log(2.0) + lgamma_d(a + 1.0) + lgamma_d(b + 1.0) -
                 lgamma_d(a + b + 2.0));
    auto rec = [a, b](int i, double& alpha, double& sqrtbeta) {
        const double ab = a + b;
        if (i == 0)
            alpha = (b - a) / (ab + 2.0);
        else {
            const double den = (2.0 * i + ab) * (2.0 * i + ab + 2.0);
            alpha = (b * b - a * a) / den;
        }
        if (i == 0)
            sqrtbeta = 0.0;
        else if (i == 1)
            sqrtbeta = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) /
                                 ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
        else {
            const double di = i;
            const double t = 2.0 * di + ab;
            sqrtbeta = std::sqrt(4.0 * di * (di + a) * (di + b) * (di + ab) /
                                 (t * t * (t + 1.0) * (t - 1.0)));
        }
    };
    auto [pos, ok] = cache.emplace(key, golub_welsch(n, rec, mu0));
    return pos->second;
}

const QuadRule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

cplx integrate_inv_sqrt_right(const std::function<cplx(double)>& f, double A, double B,
                              int n) {
    // weight (1-x)^{-1/2} on [-1,1], mapped: (B-s)^{-1/2} picks up sqrt((B-A)/2)
    const QuadRule& q = gauss_jacobi(n, -0.5, 0.0);
    const double half = 0.5 * (B - A);
    cplx acc = 0.0;
    for (size_t i = 0; i < q.nodes.size(); ++i) {
        const double s = A + half * (q.nodes[i] + 1.0);
        acc += q.weights[i] * f(s);
    }
    return acc * std::sqrt(half);
}

cplx integrate_inv_sqrt_left(const std::function<cplx(double)>& f, double A, double B,
                             int n) {
    const QuadRule& q = gauss_jacobi(n, 0.0, -0.5);
    const double half = 0.5 * (B - A);
    cplx acc = 0.0;
    for (size_t i = 0; i < q.nodes.size(); ++i) {
        const double s = A + half * (q.nodes[i] + 1.0);
        acc += q.weights[i] * f(s);
    }
    return acc * std::sqrt(half);
}

cplx integrate_gl(const std::function<cplx(double)>& f, double A, double B, int n) {
    const QuadRule& q = gauss_legendre(n);
    const double half = 0.5 * (B - A), mid = 0.5 * (A + B);
    cplx acc = 0.0;
    for (size_t i = 0; i < q.nodes.size(); ++i)
        acc += q.weights[i] * f(mid + half * q.nodes[i]);
    return acc * half;
}

cplx integrate_graded(const std::function<cplx(double)>& f, double A, double B,
                      bool toward_left, int panels, int n) {
    // Panel edges geometric with ratio 2 toward the singular endpoint.
    cplx acc = 0.0;
    double len = B - A;
    double hi = len;
    for (int j = 0; j < panels; ++j) {
        const double lo = (j == panels - 1) ? 0.0 : hi * 0.5;
        double a, b;
        if (toward_left) {
            a = A + lo;
            b = A + hi;
        } else {
            a = B - hi;
            b = B - lo;
        }
        acc += integrate_gl(f, a, b, n);
        hi = lo;
    }
    return acc;
}

cplx integrate_tail_left(const std::function<cplx(double)>& f, double B, int panels,
                         int n) {
    // s = B - (1-u)/u, ds = du/u^2, u in (0,1]
    auto g = [&](double u) {
        const double s = B - (1.0 - u) / u;
        return f(s) / (u * u);
    };
    return integrate_graded(g, 0.0, 1.0, true, panels, n);
}

cplx integrate_tail_right(const std::function<cplx(double)>& f, double A, int panels,
                          int n) {
    auto g = [&](double u) {
        const double s = A + (1.0 - u) / u;
        return f(s) / (u * u);
    };
    return integrate_graded(g, 0.0, 1.0, true, panels, n);
}

static cplx adapt_rec(const std::function<cplx(double)>& f, double A, double B,
                      cplx whole, double tol, int depth) {
    const double m = 0.5 * (A + B);
    const cplx left = integrate_gl(f, A, m, 16);
    const cplx right = integrate_gl(f, m, B, 16);
    if (depth <= 0 || std::abs(left + right - whole) < tol) return left + right;
    return adapt_rec(f, A, m, left, 0.5 * tol, depth - 1) +
           adapt_rec(f, m, B, right, 0.5 * tol, depth - 1);
}

cplx integrate_adaptive(const std::function<cplx(double)>& f, double A, double B,
                        double tol, int depth) {
    return adapt_rec(f, A, B, integrate_gl(f, A, B, 16), tol, depth);
}

}  // namespace nls
