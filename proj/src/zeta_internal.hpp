#pragma once

#include <complex>

namespace cmo::detail {

// Euler-Maclaurin remainder for sum_{n>=0} (n + alpha)^{-s} after the direct
// terms, evaluated at w = N + alpha:
//   w^{1-s}/(s-1) + w^{-s}/2 + sum_k B_2k/(2k)! (s)_{2k-1} w^{-s-2k+1}.
// With `regular` the pole term is replaced by w^{1-s}/(s-1) - 1/(s-1).
std::complex<double> euler_maclaurin_tail(std::complex<double> s, double w, bool regular);

// base^{-s} for base > 0.
std::complex<double> power_neg(double base, std::complex<double> s);

}  // namespace cmo::detail

namespace cmo::detail {

// Riemann zeta by Euler-Maclaurin with shift max(25, ceil|t|), without the
// |t| <= 1000 window check. Used for boundary values on Re s = 1, 2.
std::complex<double> zeta_unchecked(std::complex<double> s);

}  // namespace cmo::detail
