#pragma once

#include <functional>
#include <vector>

#include "nls/matrix2.hpp"

namespace nls {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss rules on [-1,1] via Golub-Welsch from the Jacobi recurrence.
// gauss_jacobi integrates against the weight (1-x)^a (1+x)^b.
const QuadRule& gauss_legendre(int n);
const QuadRule& gauss_jacobi(int n, double a, double b);

// integral_{A}^{B} f(s) (B-s)^{-1/2} ds, f smooth.
cplx integrate_inv_sqrt_right(const std::function<cplx(double)>& f, double A, double B,
                              int n = 64);
// integral_{A}^{B} f(s) (s-A)^{-1/2} ds, f smooth.
cplx integrate_inv_sqrt_left(const std::function<cplx(double)>& f, double A, double B,
                             int n = 64);
// integral_{A}^{B} f(s) ds, f smooth.
cplx integrate_gl(const std::function<cplx(double)>& f, double A, double B, int n = 64);

// Composite Gauss-Legendre with panels graded geometrically toward one
// endpoint (ratio 2). Handles integrable log or sqrt-log behavior at the
// graded end; f is evaluated strictly inside (A,B).
cplx integrate_graded(const std::function<cplx(double)>& f, double A, double B,
                      bool toward_left, int panels = 36, int n = 24);

// integral_{-inf}^{B} f(s) ds via u in (0,1], s = B - (1-u)/u. f must decay
// at least like |s|^{-2-eps}.
cplx integrate_tail_left(const std::function<cplx(double)>& f, double B, int panels = 12,
                         int n = 32);
// integral_{A}^{+inf} f(s) ds, same mapping mirrored.
cplx integrate_tail_right(const std::function<cplx(double)>& f, double A, int panels = 12,
                          int n = 32);

// Test-friendly adaptive quadrature (bisected Gauss-Legendre), used as an
// independent oracle; not on the production path.
cplx integrate_adaptive(const std::function<cplx(double)>& f, double A, double B,
                        double tol = 1e-12, int depth = 48);

}  // namespace nls
