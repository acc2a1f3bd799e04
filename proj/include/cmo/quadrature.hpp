#pragma once

#include <cmath>
#include <cstddef>

namespace cmo {

struct QuadratureStats {
  std::size_t evaluations = 0;
  std::size_t subdivisions = 0;
  bool depth_exhausted = false;
};

namespace detail {

template <class F, class T>
T simpson_recurse(F& f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth,
                  QuadratureStats& stats) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  stats.evaluations += 2;
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) {
    stats.depth_exhausted = true;
    return left + right + delta / 15.0;
  }
  ++stats.subdivisions;
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, stats) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, stats);
}

}  // namespace detail

// Adaptive Simpson on [a, b] given the endpoint and midpoint values already
// evaluated. T is double or std::complex<double>.
template <class F, class T>
T adaptive_simpson(F& f, double a, double b, T fa, T fm, T fb, double tol, int max_depth, QuadratureStats& stats) {
  const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth, stats);
}

template <class F>
auto adaptive_simpson(F&& f, double a, double b, double tol, int max_depth, QuadratureStats& stats) {
  auto fa = f(a);
  auto fm = f(0.5 * (a + b));
  auto fb = f(b);
  stats.evaluations += 3;
  return adaptive_simpson(f, a, b, fa, fm, fb, tol, max_depth, stats);
}

}  // namespace cmo
