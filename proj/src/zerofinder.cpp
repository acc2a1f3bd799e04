#include "cmo/zerofinder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cmo/analytic.hpp"
#include "cmo/errors.hpp"

namespace cmo {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTinyL = 1e-12;

// Split fractions tried in turn when a cut runs through a zero. The first
// sigma fraction avoids landing on the critical line.
constexpr std::array<double, 4> kSigmaFractions{0.4631, 0.5377, 0.3819, 0.6133};
constexpr std::array<double, 4> kTFractions{0.5, 0.4631, 0.5377, 0.3819};

std::string describe(const SearchRectangle& r) {
  std::ostringstream out;
  out.precision(12);
  out << "[" << r.sigma_min << ", " << r.sigma_max << "] x [" << r.t_min << ", " << r.t_max << "]";
  return out.str();
}

class Walker {
 public:
  Walker(const DirichletCharacter& chi, const WindingOptions& opt, const SearchRectangle& rect)
      : chi_(chi), opt_(opt), rect_(rect) {}

  cd eval(cd s) {
    const cd v = l_function(chi_, s);
    if (std::abs(v) < kTinyL) {
      std::ostringstream msg;
      msg << "|L| < 1e-12 at " << s.real() << " + " << s.imag() << "i on the boundary of " << describe(rect_);
      throw BoundaryZeroError(msg.str());
    }
    return v;
  }

  // Total argument change of L along the segment a -> b.
  double edge(cd a, cd b) {
    const double len = std::abs(b - a);
    const double min_step = opt_.min_relative_step;
    double u = 0.0;
    double du = std::min(1.0, 0.05 / len);
    cd va = eval(a);
    double total = 0.0;
    while (u < 1.0) {
      const double un = std::min(1.0, u + du);
      const cd zb = a + (b - a) * un;
      const cd vb = eval(zb);
      const double d = std::arg(vb / va);
      bool ok = std::fabs(d) < kPi / 2;
      if (ok) {
        const cd vm = eval(a + (b - a) * (0.5 * (u + un)));
        const double d1 = std::arg(vm / va);
        const double d2 = std::arg(vb / vm);
        ok = std::fabs(d1 + d2 - d) < 1e-6 && std::fabs(d1) < kPi / 2 && std::fabs(d2) < kPi / 2;
      }
      if (!ok) {
        du *= 0.5;
        if (du < min_step) {
          std::ostringstream msg;
          msg << "boundary step below " << min_step << " near " << zb.real() << " + " << zb.imag() << "i on "
              << describe(rect_);
          throw BoundaryZeroError(msg.str());
        }
        continue;
      }
      total += refined(a, b, u, un, va, vb, d);
      u = un;
      va = vb;
      du = std::min(1.0, du * 1.5);
    }
    return total;
  }

 private:
  double refined(cd a, cd b, double u0, double u1, cd v0, cd v1, double d) {
    const unsigned k = opt_.extra_halvings;
    if (k == 0) return d;
    const std::size_t parts = std::size_t{1} << k;
    double sum = 0.0;
    cd prev = v0;
    for (std::size_t j = 1; j <= parts; ++j) {
      const cd v = (j == parts) ? v1 : eval(a + (b - a) * (u0 + (u1 - u0) * static_cast<double>(j) / parts));
      sum += std::arg(v / prev);
      prev = v;
    }
    return sum;
  }

  const DirichletCharacter& chi_;
  const WindingOptions& opt_;
  const SearchRectangle& rect_;
};

void check_character(const DirichletCharacter& chi) {
  if (chi.principal()) throw InvalidArgument("zero search needs a non-principal character");
}

struct Pending {
  SearchRectangle rect;
  int count;
};

// Newton iteration from z0 with a central-difference derivative.
bool newton(const DirichletCharacter& chi, cd z0, cd& root, double& residual) {
  constexpr double h = 1e-6;
  cd z = z0;
  cd v = l_function(chi, z);
  for (int it = 0; it < 60 && std::abs(v) >= 1e-13; ++it) {
    const cd dv = (l_function(chi, z + h) - l_function(chi, z - h)) / (2.0 * h);
    if (std::abs(dv) == 0.0) return false;
    const cd step = v / dv;
    z -= step;
    if (!(std::abs(z) < 1e6)) return false;
    v = l_function(chi, z);
    if (std::abs(step) < 1e-15) break;
  }
  root = z;
  residual = std::abs(v);
  return residual < 1e-8;
}

bool inside(const SearchRectangle& r, cd z, double slack) {
  return z.real() >= r.sigma_min - slack && z.real() <= r.sigma_max + slack && z.imag() >= r.t_min - slack &&
         z.imag() <= r.t_max + slack;
}

}  // namespace

double SearchRectangle::diameter() const noexcept { return std::hypot(width(), height()); }

void validate(const SearchRectangle& r) {
  if (!(r.sigma_min > 0.0 && r.sigma_min < r.sigma_max && r.sigma_max < 1.0 && r.t_min < r.t_max) ||
      !std::isfinite(r.t_min) || !std::isfinite(r.t_max))
    throw InvalidArgument("search rectangle must satisfy 0 < sigma_min < sigma_max < 1, t_min < t_max: " +
                          describe(r));
}

int count_zeros_rectangle(const DirichletCharacter& chi, const SearchRectangle& rect, const WindingOptions& options) {
  check_character(chi);
  validate(rect);
  Walker w(chi, options, rect);
  const cd c0{rect.sigma_min, rect.t_min}, c1{rect.sigma_max, rect.t_min};
  const cd c2{rect.sigma_max, rect.t_max}, c3{rect.sigma_min, rect.t_max};
  const double total = w.edge(c0, c1) + w.edge(c1, c2) + w.edge(c2, c3) + w.edge(c3, c0);
  const double turns = total / (2.0 * kPi);
  const double n = std::round(turns);
  if (std::fabs(turns - n) > 1e-6 || n < 0) {
    std::ostringstream msg;
    msg << "winding number " << turns << " is not a non-negative integer on " << describe(rect);
    throw NumericError(msg.str());
  }
  return static_cast<int>(n);
}

ZeroSearchResult locate_zeros(const DirichletCharacter& chi, double t_min, double t_max, double tol) {
  check_character(chi);
  if (chi.modulus() > kZeroSearchMaxModulus) throw InvalidArgument("zero search is limited to q <= 100");
  if (!(t_min < t_max) || std::fabs(t_min) > kZeroSearchMaxAbsT || std::fabs(t_max) > kZeroSearchMaxAbsT)
    throw InvalidArgument("zero search needs t_min < t_max within |t| <= 50");
  if (!(tol > 0.0)) throw InvalidArgument("zero search needs tol > 0");

  ZeroSearchResult result;
  std::vector<Pending> stack;

  // Initial rectangle, dilated in height when a zero sits on its boundary.
  SearchRectangle root{kZeroSearchSigmaMin, kZeroSearchSigmaMax, t_min, t_max};
  bool counted = false;
  for (int attempt = 0; attempt < 10 && !counted; ++attempt) {
    try {
      const int n = count_zeros_rectangle(chi, root, {});
      stack.push_back({root, n});
      counted = true;
    } catch (const BoundaryZeroError&) {
      root.t_max = root.t_min + root.height() * 1.0001;
    }
  }
  if (!counted) {
    result.failures.push_back({root, "boundary zero persisted through 10 dilations"});
    return result;
  }

  while (!stack.empty()) {
    const Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    const SearchRectangle& r = cur.rect;
    if (cur.count == 1 && r.diameter() < 10.0 * tol) {
      cd z;
      double residual = 0.0;
      const cd centre{0.5 * (r.sigma_min + r.sigma_max), 0.5 * (r.t_min + r.t_max)};
      if (newton(chi, centre, z, residual) && inside(r, z, 10.0 * tol) && z.real() > 0.0 && z.real() < 1.0) {
        result.zeros.push_back({chi.modulus(), chi.index(), z, residual, 1});
      } else {
        result.failures.push_back({r, "refinement did not reach |L| < 1e-8 inside the rectangle"});
      }
      continue;
    }
    if (r.diameter() < 1e-12) {
      result.failures.push_back({r, "rectangle collapsed with count " + std::to_string(cur.count)});
      continue;
    }
    const bool split_sigma = r.width() > r.height();
    const auto& fractions = split_sigma ? kSigmaFractions : kTFractions;
    bool split = false;
    for (double f : fractions) {
      SearchRectangle a = r, b = r;
      if (split_sigma) {
        a.sigma_max = b.sigma_min = r.sigma_min + f * r.width();
      } else {
        a.t_max = b.t_min = r.t_min + f * r.height();
      }
      try {
        const int na = count_zeros_rectangle(chi, a, {});
        const int nb = count_zeros_rectangle(chi, b, {});
        if (na + nb != cur.count) continue;
        // Push the upper/right half first so lower zeros are handled first.
        stack.push_back({b, nb});
        stack.push_back({a, na});
        split = true;
        break;
      } catch (const BoundaryZeroError&) {
        continue;
      }
    }
    if (!split) result.failures.push_back({r, "no split fraction gave a consistent count"});
  }

  std::sort(result.zeros.begin(), result.zeros.end(), [](const ZeroRecord& x, const ZeroRecord& y) {
    if (x.rho.imag() != y.rho.imag()) return x.rho.imag() < y.rho.imag();
    return x.rho.real() < y.rho.real();
  });
  return result;
}

PrimeValueSpec cmo_from_zero(const DirichletCharacter& chi, std::complex<double> rho) {
  return PrimeValueSpec::twisted_character(chi.modulus(), chi.index(), rho);
}

nlohmann::json zeros_to_json(std::span<const ZeroRecord> zeros) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& z : zeros)
    out.push_back({{"q", z.q}, {"index", z.index}, {"re", z.rho.real()}, {"im", z.rho.imag()},
                   {"residual", z.residual}});
  return out;
}

}  // namespace cmo
