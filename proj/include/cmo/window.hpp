#pragma once

#include <complex>
#include <cstddef>

namespace cmo {

// Window w_{x,a}: equal to 1 for |u| <= x - 2a, 0 for |u| >= x + 2a, and in
// [0, 1] in between. Requires x >= 2 >= 2a > 0.
struct WindowParams {
  double x;
  double a;
};

// Throws InvalidArgument unless x >= 2 >= 2a > 0.
void validate(const WindowParams& params);

// w_{x,a}(u) = (1/pi) \int_R (sin xt / t) (sin at / at)^2 e^{-itu} dt by
// panelled Gauss-Kronrod quadrature. The integral is truncated where the
// 1/(a^2 t^3) envelope leaves a tail below tol/2. Throws NumericError when
// the summed panel error estimates exceed tol.
double window_weight(const WindowParams& params, double u, double tol = 1e-7);

// Boundary values F(1+it) of the Dirichlet series with closed forms.
enum class BoundaryModel {
  liouville,  // zeta(2+2it) / zeta(1+it)
  mobius,     // 1 / zeta(1+it)
};

// F(1+it); the limit value 0 at t = 0.
std::complex<double> boundary_value(BoundaryModel model, double t);

// Constant C in |F(1+it)| <= C log(3|t|) for |t| >= 1/2, calibrated by a dense
// scan of |t| <= 5000 (see the window tests) with headroom.
double boundary_growth_constant(BoundaryModel model);

// Bound on the part of (1/pi) \int F(1+it) (sin xt/t)(sin at/at)^2 dt with |t| > T.
double window_tail_bound(BoundaryModel model, const WindowParams& params, double T);
// Smallest T (to 1%) whose tail bound is <= tol.
double window_required_T(BoundaryModel model, const WindowParams& params, double tol);

inline constexpr double kWindowDefaultT = 5000.0;

struct WindowSumResult {
  double value;         // real part of the integral
  double imag_residue;  // |imaginary part|, ~0 for real-coefficient models
  double T;
  double tail_bound;
  std::size_t evaluations;
  std::size_t refinements;
};

// (1/pi) \int_{-T}^{T} F(1+it) (sin xt / t) (sin at / at)^2 dt, which tends to
// sum_n f(n)/n w_{x,a}(log n). Adaptive composite Simpson with base step
// min(a, 1/x)/10; quadrature tolerance tol/10. Throws TailBoundError (with
// the required T) when the tail bound at T exceeds tol.
WindowSumResult window_sum(BoundaryModel model, const WindowParams& params, double T = kWindowDefaultT,
                           double tol = 1e-4);

}  // namespace cmo
