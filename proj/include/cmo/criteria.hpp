#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cmo/prime_table.hpp"
#include "cmo/prime_value_spec.hpp"
#include "cmo/sequence.hpp"

namespace cmo {

enum class Verdict {
  diverges_toward_criterion,
  bounded,
  inconclusive,
  satisfied,      // density and integral tests
  not_satisfied,
};

std::string_view to_string(Verdict v);

// Frozen decision rule for checkpointed sums heading to -infinity:
//   diverges  iff last < -C and the last `steps` increments are all negative;
//   bounded   iff |last| < C and |v_m - v_{m-steps}| < bounded_change;
//   inconclusive otherwise (also when fewer than steps + 1 checkpoints exist).
struct DivergenceRule {
  double C = 3.0;
  unsigned steps = 3;
  double bounded_change = 0.05;

  std::string describe() const;
};

// Applies the rule to a series heading toward -infinity; `upward` mirrors it.
Verdict classify(std::span<const double> values, const DivergenceRule& rule, bool upward = false);

struct CriterionReport {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::uint64_t> checkpoints;
  // Named real series, each with one value per checkpoint, in insertion order.
  std::vector<std::pair<std::string, std::vector<double>>> series;
  std::map<std::string, double> scalars;
  std::map<std::string, Verdict> series_verdicts;
  std::vector<std::string> warnings;
  Verdict verdict = Verdict::inconclusive;
  std::string rule;

  const std::vector<double>& values(std::string_view name) const;

  nlohmann::json to_json() const;
  // One row per checkpoint: x, then one column per series.
  std::string to_csv() const;
};

// Nonempty ascending real values containing 0.
class TauGrid {
 public:
  // Default grid {-5, -2, -1, -0.5, 0, 0.5, 1, 2, 5}.
  TauGrid();
  // Adds 0 and sorts; drops duplicates. Throws InvalidArgument on non-finite values.
  explicit TauGrid(std::vector<double> taus);
  // Default grid merged with extra values.
  static TauGrid with_defaults(std::span<const double> extra);

  const std::vector<double>& values() const noexcept { return taus_; }

 private:
  std::vector<double> taus_;
};

inline constexpr std::uint64_t kCriteriaDefaultP = 10'000'000;

// Necessary conditions for a small CMO function: sup_n |f(n)| = sup_p |f(p)| < 1
// and sum_p |f(p)| = infinity. Checkpoints are the decades up to n_max.
CriterionReport thm2_diagnostics(const Sequence& seq, const PrimeTable& table);

// sum_{p <= x, Re f(p) < 0} Re f(p) / p.
CriterionReport thm6_sum(const PrimeValueSpec& spec, std::uint64_t P, std::span<const std::uint64_t> checkpoints,
                         const PrimeTable& table);

// Per tau: sum_{p <= x} (Re[(1 + f(p)) p^{-i tau}] - 1) / p. Hypotheses
// |1 + f(p)| <= 1 and f(2) != -2 are checked and reported as warnings.
CriterionReport thm7_criterion(const PrimeValueSpec& spec, const TauGrid& grid, std::uint64_t P,
                               std::span<const std::uint64_t> checkpoints, const PrimeTable& table);

// sum_{p <= x} Re f(p) / p under |f(p)| <= 1 and Re f(p) <= 0 (checked).
CriterionReport thm8_criterion(const PrimeValueSpec& spec, std::uint64_t P, std::span<const std::uint64_t> checkpoints,
                               const PrimeTable& table);

// sum_{p <= x} |1 + f(p)|^2 / (x / log x) at each x. Satisfied iff the
// maximum over x >= x_last / 1000 is below 1 - margin.
CriterionReport thm9_density(const PrimeValueSpec& spec, std::span<const std::uint64_t> xs, const PrimeTable& table,
                             double margin = 0.05);

struct IntegralResult {
  double value;
  std::size_t evaluations;
  bool converged;
};

// \int_1^2 exp(S(sigma)/2) dsigma / sqrt(sigma - 1), S(sigma) = sum_{p <= P}
// |1 + f(p)|^2 p^{-sigma}, computed as \int_0^1 2 exp(S(1 + v^2)/2) dv.
IntegralResult thm9p_integral(const PrimeValueSpec& spec, std::uint64_t P, double quad_tol, const PrimeTable& table);

// The integral for each P in Ps (ascending). Verdict satisfied when the last
// three relative changes are below 1e-3, not_satisfied when the values keep
// growing by at least 1% per step, inconclusive otherwise.
CriterionReport thm9p_scan(const PrimeValueSpec& spec, std::span<const std::uint64_t> Ps, double quad_tol,
                           const PrimeTable& table);

// f(p) = base(p) + delta(p). delta must live on primes, and |f(p)| < 1 is
// required on every delta prime and on all primes up to check_limit.
// Throws InvalidPerturbation otherwise.
PrimeValueSpec build_perturbation(const PrimeValueSpec& base, const std::map<std::uint64_t, cplx>& delta,
                                  const PrimeTable& table, std::uint64_t check_limit = 100'000);

// Partial sums of f and g side by side (series f_re, f_im, g_re, g_im, diff_abs).
CriterionReport compare_partial_sums(const Sequence& f, const Sequence& g, std::span<const std::uint64_t> checkpoints);

}  // namespace cmo
