#include "cmo/window.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cmo/analytic.hpp"
#include "cmo/compensated_sum.hpp"
#include "cmo/errors.hpp"
#include "cmo/quadrature.hpp"
#include "zeta_internal.hpp"

namespace cmo {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double sinc(double y) {
  if (std::fabs(y) < 1e-4) return 1.0 - y * y / 6.0;
  return std::sin(y) / y;
}

// (sin xt / t) (sin at / at)^2, with value x at t = 0.
double kernel(const WindowParams& p, double t) {
  const double s = sinc(p.a * t);
  return p.x * sinc(p.x * t) * s * s;
}

// Evaluates F(1 + i t_k), t_k = t0 + k h, k = 0..count-1, into out. Within a
// block of points the Dirichlet polynomial terms m^{-it} are advanced by the
// fixed rotation m^{-ih}; each block starts from freshly computed phases.
void boundary_values_on_grid(BoundaryModel model, double t0, double h, std::size_t count, std::vector<cd>& out) {
  constexpr std::size_t kBlock = 512;
  out.resize(count);
  std::vector<double> zr, zi, rr, ri, inv1, inv2;
  for (std::size_t k0 = 0; k0 < count; k0 += kBlock) {
    const std::size_t k1 = std::min(count, k0 + kBlock);
    const double ts = t0 + static_cast<double>(k0) * h;
    const double te = t0 + static_cast<double>(k1 - 1) * h;
    const unsigned N = euler_maclaurin_shift(cd{1.0, std::max(std::fabs(ts), std::fabs(te))});
    zr.resize(N);
    zi.resize(N);
    rr.resize(N);
    ri.resize(N);
    inv1.resize(N);
    inv2.resize(N);
    for (unsigned m = 1; m < N; ++m) {
      const double lm = std::log(static_cast<double>(m));
      zr[m] = std::cos(ts * lm);
      zi[m] = -std::sin(ts * lm);
      rr[m] = std::cos(h * lm);
      ri[m] = -std::sin(h * lm);
      inv1[m] = 1.0 / m;
      inv2[m] = inv1[m] * inv1[m];
    }
    for (std::size_t k = k0; k < k1; ++k) {
      const double t = t0 + static_cast<double>(k) * h;
      double s1r = 0, s1i = 0, s2r = 0, s2i = 0;
      for (unsigned m = 1; m < N; ++m) {
        const double a = zr[m], b = zi[m];
        s1r += a * inv1[m];
        s1i += b * inv1[m];
        s2r += (a * a - b * b) * inv2[m];
        s2i += 2.0 * a * b * inv2[m];
        zr[m] = a * rr[m] - b * ri[m];
        zi[m] = a * ri[m] + b * rr[m];
      }
      if (t == 0.0) {
        out[k] = 0.0;
        continue;
      }
      const cd s1{1.0, t};
      const cd zeta1 = cd{s1r, s1i} + detail::euler_maclaurin_tail(s1, N, false);
      if (model == BoundaryModel::mobius) {
        out[k] = 1.0 / zeta1;
      } else {
        const cd zeta2 = cd{s2r, s2i} + detail::euler_maclaurin_tail(2.0 * s1, N, false);
        out[k] = zeta2 / zeta1;
      }
    }
  }
}

}  // namespace

void validate(const WindowParams& p) {
  if (!(p.x >= 2.0 && p.a > 0.0 && 2.0 * p.a <= 2.0) || !std::isfinite(p.x)) {
    std::ostringstream msg;
    msg << "window parameters need x >= 2 >= 2a > 0 (x = " << p.x << ", a = " << p.a << ")";
    throw InvalidArgument(msg.str());
  }
}

double window_weight(const WindowParams& params, double u, double tol) {
  validate(params);
  if (!(tol > 0.0)) throw InvalidArgument("window_weight needs tol > 0");
  const double a = params.a;
  // (2/pi) \int_T^inf dt / (a^2 t^3) = 1 / (pi a^2 T^2) <= tol / 2
  const double T = std::sqrt(2.0 / (kPi * a * a * tol));
  const double omega = params.x + std::fabs(u) + 2.0 * a;
  const double panel = 4.0 * kPi / omega;
  const auto panels = static_cast<std::size_t>(std::ceil(T / panel));
  auto f = [&](double t) { return kernel(params, t) * std::cos(u * t); };
  CompensatedSum value, error;
  for (std::size_t i = 0; i < panels; ++i) {
    double err = 0.0;
    const double lo = panel * static_cast<double>(i);
    value.add(boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, lo + panel, 0, 0.0, &err));
    error.add(err);
  }
  const double estimate = 2.0 / kPi * value.value();
  const double err = 2.0 / kPi * error.value();
  if (!(err <= tol)) {
    std::ostringstream msg;
    msg << "window_weight quadrature did not converge: error estimate " << err << " > tol " << tol << " (x = "
        << params.x << ", a = " << a << ", u = " << u << ", panels = " << panels << ")";
    throw NumericError(msg.str());
  }
  return estimate;
}

std::complex<double> boundary_value(BoundaryModel model, double t) {
  if (t == 0.0) return 0.0;
  const cd s1{1.0, t};
  const cd z1 = detail::zeta_unchecked(s1);
  if (model == BoundaryModel::mobius) return 1.0 / z1;
  return detail::zeta_unchecked(2.0 * s1) / z1;
}

double boundary_growth_constant(BoundaryModel model) {
  // Observed maxima of |F(1+it)| / log(3|t|) over 1/2 <= |t| <= 5000:
  // liouville 1.4829, mobius 1.2049, both at t = 1/2. Frozen with headroom.
  return model == BoundaryModel::liouville ? 1.6 : 1.3;
}

double window_tail_bound(BoundaryModel model, const WindowParams& params, double T) {
  const double C = boundary_growth_constant(model);
  const double a = params.a;
  // (2/pi) C / a^2 \int_T^inf log(3t) / t^3 dt
  return 2.0 * C / (kPi * a * a) * (2.0 * std::log(3.0 * T) + 1.0) / (4.0 * T * T);
}

double window_required_T(BoundaryModel model, const WindowParams& params, double tol) {
  double T = 1.0;
  while (window_tail_bound(model, params, T) > tol) T *= 1.01;
  return T;
}

WindowSumResult window_sum(BoundaryModel model, const WindowParams& params, double T, double tol) {
  validate(params);
  if (!(T > 0.5) || !(tol > 0.0)) throw InvalidArgument("window_sum needs T > 1/2 and tol > 0");
  const double tail = window_tail_bound(model, params, T);
  if (tail > tol) {
    const double need = window_required_T(model, params, tol);
    std::ostringstream msg;
    msg << "tail bound " << tail << " at T = " << T << " exceeds tol " << tol << "; need T >= " << need;
    throw TailBoundError(msg.str(), need);
  }

  const double h_max = std::min(params.a, 1.0 / params.x) / 10.0;
  const auto panels = static_cast<std::size_t>(std::ceil(2.0 * T / (4.0 * h_max)));
  const double h = 2.0 * T / (4.0 * static_cast<double>(panels));
  const std::size_t points = 4 * panels + 1;

  std::vector<cd> F;
  boundary_values_on_grid(model, -T, h, points, F);
  // Symmetric grid: pin the centre to t = 0 exactly.
  F[points / 2] = 0.0;

  std::vector<cd> g(points);
  for (std::size_t k = 0; k < points; ++k) {
    const double t = (k == points / 2) ? 0.0 : -T + static_cast<double>(k) * h;
    g[k] = F[k] * kernel(params, t);
  }

  auto direct = [&](double t) { return boundary_value(model, t) * kernel(params, t); };
  const double quad_tol = tol / 10.0;
  const double panel_tol = quad_tol * (4.0 * h) / (2.0 * T);
  QuadratureStats stats;
  ComplexCompensatedSum acc;
  std::size_t refinements = 0;
  for (std::size_t j = 0; j < panels; ++j) {
    const std::size_t k = 4 * j;
    const cd coarse = (4.0 * h) / 6.0 * (g[k] + 4.0 * g[k + 2] + g[k + 4]);
    const cd fine = h / 3.0 * (g[k] + 4.0 * g[k + 1] + 2.0 * g[k + 2] + 4.0 * g[k + 3] + g[k + 4]);
    if (std::abs(fine - coarse) <= 15.0 * panel_tol) {
      acc.add(fine + (fine - coarse) / 15.0);
      continue;
    }
    ++refinements;
    const double t0 = -T + static_cast<double>(k) * h;
    acc.add(adaptive_simpson(direct, t0, t0 + 2.0 * h, g[k], g[k + 1], g[k + 2], 0.5 * panel_tol, 30, stats));
    acc.add(adaptive_simpson(direct, t0 + 2.0 * h, t0 + 4.0 * h, g[k + 2], g[k + 3], g[k + 4], 0.5 * panel_tol, 30,
                             stats));
  }
  if (stats.depth_exhausted) throw NumericError("window_sum: adaptive Simpson exhausted its depth");
  const cd integral = acc.value() / kPi;
  return {integral.real(), std::fabs(integral.imag()), T, tail, points + stats.evaluations, refinements};
}

}  // namespace cmo
