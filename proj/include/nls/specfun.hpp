#pragma once

#include "nls/matrix2.hpp"

namespace nls {

// log Gamma(z), principal-continuous for Re z > 0 reached by recurrence;
// Stirling series once |z| is large enough. Accurate to ~1e-14 relative.
cplx log_gamma(cplx z);

struct AiryValue {
    cplx ai;
    cplx aip;
};

// Complex Airy function Ai and Ai'. Maclaurin series in double-double
// arithmetic for |z| <= 9 (exact to double precision despite the
// e^{2 zeta} cancellation), asymptotic series beyond.
AiryValue complex_airy(cplx z);

// Both representations evaluated at |z| = r; returns the largest entry
// difference over a sweep of directions. Diagnostic for the seam choice.
double airy_seam_mismatch(double r, int samples = 48);

}  // namespace nls
