#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cmo/prime_table.hpp"
#include "cmo/sequence.hpp"

namespace cmo {

// tau and the slowly varying L in sum_{n<=x} g(n) = x^{1+i tau} L(log x) + o(x).
struct InversionModel {
  enum class Kind { zero, constant, empirical };

  double tau = 0.0;
  Kind kind = Kind::zero;
  cplx c{0.0, 0.0};  // constant model

  // Empirical model: L-hat(log x) = x^{-1-i tau} sum_{n<=x} g(n) at each x, and
  // the sampled sup over x <= t <= e x of |L-hat(log t) - L-hat(log x)|.
  std::vector<std::uint64_t> xs;
  std::vector<cplx> L_hat;
  std::vector<double> continuity;
  // Checkpoints whose continuity window ran past the end of g.
  std::vector<std::uint64_t> truncated;

  static InversionModel zero(double tau = 0.0);
  static InversionModel constant(cplx c, double tau = 0.0);
};

std::string_view to_string(InversionModel::Kind kind);

struct ResidualReport {
  std::string id;  // "thm10" or "thm11"
  double tau = 0.0;
  InversionModel::Kind model = InversionModel::Kind::zero;
  cplx kappa{0.0, 0.0};
  std::vector<std::uint64_t> xs;
  std::vector<cplx> lhs;
  std::vector<cplx> rhs;
  std::vector<double> residuals;  // |lhs - rhs| as stored
  std::vector<std::string> conventions;
  double max_abs_g = 0.0;
  // Final residual < 1/2 the residual at the first checkpoint >= 10. Unset
  // when no checkpoint >= 10 precedes the last one.
  std::optional<bool> trend_consistent;

  nlohmann::json to_json() const;
  // x, lhs_re, lhs_im, rhs_re, rhs_im, residual
  std::string to_csv() const;
};

// F(x) = sum_{n<=x} (mu * g)(n) from g alone:
//   sum_{m<=y} mu(m) G(x/m) + sum_{n<=x/y} g(n) M(x/n) - G(x/y) M(y),
// with all arguments floored. Requires x >= 2y >= 4, floor(x) <= g.n_max()
// and floor(x) <= table.limit().
cplx hyperbola_F(const Sequence& g, double x, double y, const PrimeTable& table);
// Default cut y = ceil(sqrt(x)) clamped to [2, x/2].
double hyperbola_default_y(double x);
cplx hyperbola_F(const Sequence& g, double x, const PrimeTable& table);

// Residuals |sum_{n<=x} f(n)/n - (F(x) + kappa G(x)) / x| with kappa = 1 at
// tau = 0 and 1/(i tau zeta(1 + i tau)) otherwise. g = f * 1 is checked for
// n <= min(1000, n_max); a mismatch throws InvalidArgument.
ResidualReport verify_thm10(const Sequence& f, const Sequence& g, const InversionModel& model,
                            std::span<const std::uint64_t> xs);

// Residuals |F(x) - kappa' G(x)| / x with kappa' = 0 at tau = 0 and
// 1/zeta(1 + i tau) otherwise.
ResidualReport verify_thm11(const Sequence& f, const Sequence& g, const InversionModel& model,
                            std::span<const std::uint64_t> xs);

// Empirical model from g at ascending checkpoints xs. The continuity
// statistic samples 64 points t = x e^{j/64}; windows beyond g.n_max() are
// cut short and recorded in `truncated`.
InversionModel estimate_L(const Sequence& g, double tau, std::span<const std::uint64_t> xs);

}  // namespace cmo
