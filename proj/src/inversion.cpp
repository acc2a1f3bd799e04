#include "cmo/inversion.hpp"

#include <cmath>

#include "cmo/analytic.hpp"
#include "cmo/compensated_sum.hpp"
#include "cmo/errors.hpp"
#include "cmo/format.hpp"

namespace cmo {
namespace {

void check_xs(std::span<const std::uint64_t> xs, std::uint64_t n_max) {
  if (xs.empty()) throw InvalidArgument("need at least one checkpoint");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 1 || xs[i] > n_max) throw InvalidArgument("checkpoints must lie in [1, n_max]");
    if (i > 0 && xs[i] <= xs[i - 1]) throw InvalidArgument("checkpoints must be strictly ascending");
  }
}

// Prefix sums P[k] = sum_{n<=k} a(n), P[0] = 0.
std::vector<cplx> prefix(const Sequence& a, std::uint64_t upto) {
  std::vector<cplx> out(upto + 1);
  ComplexCompensatedSum acc;
  for (std::uint64_t n = 1; n <= upto; ++n) {
    acc.add(a[n]);
    out[n] = acc.value();
  }
  return out;
}

void check_convolution(const Sequence& f, const Sequence& g) {
  const std::uint64_t n = std::min<std::uint64_t>({1000, f.n_max(), g.n_max()});
  const auto expect = dirichlet_convolve(f, constant_one(n), n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::abs(expect[k] - g[k]) > 1e-9 * (1.0 + std::abs(g[k])))
      throw InvalidArgument("g is not f * 1 at n = " + std::to_string(k));
  }
}

ResidualReport prepare(const char* id, const Sequence& f, const Sequence& g, const InversionModel& model,
                       std::span<const std::uint64_t> xs) {
  const std::uint64_t n_max = std::min(f.n_max(), g.n_max());
  check_xs(xs, n_max);
  check_convolution(f, g);
  ResidualReport r;
  r.id = id;
  r.tau = model.tau;
  r.model = model.kind;
  r.xs.assign(xs.begin(), xs.end());
  for (std::uint64_t n = 1; n <= xs.back(); ++n) r.max_abs_g = std::max(r.max_abs_g, std::abs(g[n]));
  return r;
}

void finish(ResidualReport& r) {
  for (std::size_t i = 0; i < r.xs.size(); ++i) r.residuals.push_back(std::abs(r.lhs[i] - r.rhs[i]));
  for (std::size_t i = 0; i + 1 < r.xs.size(); ++i) {
    if (r.xs[i] >= 10) {
      r.trend_consistent = r.residuals.back() < 0.5 * r.residuals[i];
      break;
    }
  }
}

nlohmann::json complex_list(const std::vector<cplx>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

}  // namespace

InversionModel InversionModel::zero(double tau) {
  InversionModel m;
  m.tau = tau;
  return m;
}

InversionModel InversionModel::constant(cplx c, double tau) {
  InversionModel m;
  m.tau = tau;
  m.kind = Kind::constant;
  m.c = c;
  return m;
}

std::string_view to_string(InversionModel::Kind kind) {
  switch (kind) {
    case InversionModel::Kind::zero:
      return "zero";
    case InversionModel::Kind::constant:
      return "constant";
    case InversionModel::Kind::empirical:
      return "empirical";
  }
  return "zero";
}

nlohmann::json ResidualReport::to_json() const {
  nlohmann::json j = {{"id", id},
                      {"tau", tau},
                      {"model", to_string(model)},
                      {"kappa", {kappa.real(), kappa.imag()}},
                      {"x", xs},
                      {"lhs", complex_list(lhs)},
                      {"rhs", complex_list(rhs)},
                      {"residual", residuals},
                      {"conventions", conventions},
                      {"max_abs_g", max_abs_g}};
  j["trend_consistent"] = trend_consistent ? nlohmann::json(*trend_consistent) : nlohmann::json(nullptr);
  return j;
}

std::string ResidualReport::to_csv() const {
  std::string out = "x,lhs_re,lhs_im,rhs_re,rhs_im,residual\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += std::to_string(xs[i]) + "," + format_double(lhs[i].real()) + "," + format_double(lhs[i].imag()) + "," +
           format_double(rhs[i].real()) + "," + format_double(rhs[i].imag()) + "," + format_double(residuals[i]) +
           "\n";
  }
  return out;
}

double hyperbola_default_y(double x) {
  return std::max(2.0, std::min(std::ceil(std::sqrt(x)), std::floor(x / 2.0)));
}

cplx hyperbola_F(const Sequence& g, double x, double y, const PrimeTable& table) {
  if (!(y >= 2.0 && x >= 2.0 * y) || !std::isfinite(x))
    throw InvalidArgument("hyperbola_F needs x >= 2y >= 4 (x = " + format_double(x) + ", y = " + format_double(y) + ")");
  const auto X = static_cast<std::uint64_t>(std::floor(x));
  const auto Y = static_cast<std::uint64_t>(std::floor(y));
  if (X > g.n_max()) throw InvalidArgument("hyperbola_F: g is shorter than x");
  if (X > table.limit()) throw InvalidArgument("hyperbola_F: x exceeds the prime table");

  const auto G = prefix(g, X);
  const auto mu = mobius_values(X, table);
  std::vector<std::int64_t> M(X + 1, 0);
  for (std::uint64_t n = 1; n <= X; ++n) M[n] = M[n - 1] + mu[n];

  const std::uint64_t Z = X / Y;
  ComplexCompensatedSum acc;
  for (std::uint64_t m = 1; m <= Y; ++m)
    if (mu[m] != 0) acc.add(static_cast<double>(mu[m]) * G[X / m]);
  for (std::uint64_t n = 1; n <= Z; ++n) acc.add(g[n] * static_cast<double>(M[X / n]));
  acc.add(-G[Z] * static_cast<double>(M[Y]));
  return acc.value();
}

cplx hyperbola_F(const Sequence& g, double x, const PrimeTable& table) {
  return hyperbola_F(g, x, hyperbola_default_y(x), table);
}

ResidualReport verify_thm10(const Sequence& f, const Sequence& g, const InversionModel& model,
                            std::span<const std::uint64_t> xs) {
  ResidualReport r = prepare("thm10", f, g, model, xs);
  if (model.tau == 0.0) {
    r.kappa = 1.0;
    r.conventions.push_back("tau = 0: 1/(i tau zeta(1 + i tau)) taken as 1");
  } else {
    const cplx s{1.0, model.tau};
    r.kappa = 1.0 / (cplx{0.0, model.tau} * zeta(s));
  }
  ComplexCompensatedSum f_over_n, F, G;
  std::uint64_t n = 0;
  for (std::uint64_t x : xs) {
    while (n < x) {
      ++n;
      f_over_n.add(f[n] / static_cast<double>(n));
      F.add(f[n]);
      G.add(g[n]);
    }
    r.lhs.push_back(f_over_n.value());
    r.rhs.push_back((F.value() + r.kappa * G.value()) / static_cast<double>(x));
  }
  finish(r);
  return r;
}

ResidualReport verify_thm11(const Sequence& f, const Sequence& g, const InversionModel& model,
                            std::span<const std::uint64_t> xs) {
  ResidualReport r = prepare("thm11", f, g, model, xs);
  if (model.tau == 0.0) {
    r.kappa = 0.0;
    r.conventions.push_back("tau = 0: 1/zeta(1) taken as 0");
  } else {
    r.kappa = 1.0 / zeta(cplx{1.0, model.tau});
  }
  r.conventions.push_back("lhs = F(x)/x, rhs = kappa' G(x)/x");
  ComplexCompensatedSum F, G;
  std::uint64_t n = 0;
  for (std::uint64_t x : xs) {
    while (n < x) {
      ++n;
      F.add(f[n]);
      G.add(g[n]);
    }
    const double xd = static_cast<double>(x);
    r.lhs.push_back(F.value() / xd);
    r.rhs.push_back(r.kappa * G.value() / xd);
  }
  finish(r);
  return r;
}

InversionModel estimate_L(const Sequence& g, double tau, std::span<const std::uint64_t> xs) {
  check_xs(xs, g.n_max());
  InversionModel m;
  m.tau = tau;
  m.kind = InversionModel::Kind::empirical;
  m.xs.assign(xs.begin(), xs.end());
  const auto G = prefix(g, g.n_max());
  auto L_at = [&](std::uint64_t x) {
    const double xd = static_cast<double>(x);
    return G[x] * std::exp(-cplx{1.0, tau} * std::log(xd));
  };
  for (std::uint64_t x : xs) {
    const cplx base = L_at(x);
    m.L_hat.push_back(base);
    double sup = 0.0;
    bool cut = false;
    for (int j = 1; j <= 64; ++j) {
      auto t = static_cast<std::uint64_t>(std::floor(static_cast<double>(x) * std::exp(j / 64.0)));
      if (t > g.n_max()) {
        cut = true;
        break;
      }
      sup = std::max(sup, std::abs(L_at(t) - base));
    }
    if (cut) m.truncated.push_back(x);
    m.continuity.push_back(sup);
  }
  return m;
}

}  // namespace cmo
