#pragma once

#include "nls/specfun.hpp"

namespace nls {

// Solution of the Airy model RH problem on the four rays arg z in
// {0, 2pi/3, pi, 4pi/3}; z must lie strictly inside one of the sectors.
Mat2 airy_model(cplx z);

// Sector formula (1..4, counterclockwise from arg 0) evaluated at z; extends
// continuously to the sector boundary, giving exact one-sided jump values.
Mat2 airy_model_in_sector(cplx z, int sector);

// Coefficients m_j of the large-z series
//   m^Ai(z) ~ z^{-sigma3/4} N (I + sum_j m_j z^{-3j/2}),  N = (1/sqrt2)[1 i; i 1].
Mat2 airy_series_coeff(int j);

// Truncated model asymptotics z^{-sigma3/4} N (I + sum_{j<=J} m_j z^{-3j/2}).
Mat2 airy_model_series(cplx z, int J);

}  // namespace nls
