#include "cmo/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "cmo/compensated_sum.hpp"
#include "cmo/errors.hpp"
#include "cmo/format.hpp"
#include "cmo/quadrature.hpp"

namespace cmo {
namespace {

// Tolerance for the unit-disc hypotheses, which are often met with equality.
constexpr double kSlack = 1e-12;

std::vector<std::uint64_t> resolve_checkpoints(std::span<const std::uint64_t> checkpoints, std::uint64_t P,
                                               const PrimeTable& table) {
  if (P < 2) throw InvalidArgument("prime bound P must be >= 2");
  if (P > table.limit()) throw InvalidArgument("prime bound P exceeds the prime table limit");
  std::vector<std::uint64_t> out(checkpoints.begin(), checkpoints.end());
  if (out.empty()) out = decade_checkpoints(P);
  if (out.empty()) out.push_back(P);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1 || out[i] > P) throw InvalidArgument("checkpoints must lie in [1, P]");
    if (i > 0 && out[i] <= out[i - 1]) throw InvalidArgument("checkpoints must be strictly ascending");
  }
  return out;
}

struct PrimeData {
  std::vector<std::uint32_t> primes;
  std::vector<cplx> f;
};

PrimeData prime_data(const PrimeValueSpec& spec, std::uint64_t P, const PrimeTable& table) {
  const PrimeValues values(spec);
  PrimeData d;
  for (std::uint32_t p : table.primes()) {
    if (p > P) break;
    d.primes.push_back(p);
    d.f.push_back(values.at_prime(p));
  }
  return d;
}

// Checkpointed sum of term(i) over primes p_i <= x.
template <class Term>
std::vector<double> checkpointed(const PrimeData& d, std::span<const std::uint64_t> xs, Term term) {
  std::vector<double> out;
  out.reserve(xs.size());
  CompensatedSum acc;
  std::size_t i = 0;
  for (std::uint64_t x : xs) {
    for (; i < d.primes.size() && d.primes[i] <= x; ++i) acc.add(term(i));
    out.push_back(acc.value());
  }
  return out;
}

nlohmann::json base_params(const PrimeValueSpec& spec, std::uint64_t P, std::span<const std::uint64_t> xs) {
  return {{"spec", to_json(spec)}, {"P", P}, {"checkpoints", std::vector<std::uint64_t>(xs.begin(), xs.end())}};
}

std::string prime_note(const char* what, std::uint64_t p, std::size_t count) {
  std::ostringstream out;
  out << what << " fails at " << count << " prime(s), first p = " << p;
  return out.str();
}

bool is_prime_checked(std::uint64_t n, const PrimeTable& table) {
  if (n <= table.limit()) return table.is_prime(n);
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::diverges_toward_criterion:
      return "diverges-toward-criterion";
    case Verdict::bounded:
      return "bounded";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::satisfied:
      return "satisfied";
    case Verdict::not_satisfied:
      return "not-satisfied";
  }
  return "inconclusive";
}

std::string DivergenceRule::describe() const {
  std::ostringstream out;
  out << "diverges iff last < -" << format_double(C) << " and each of the last " << steps
      << " checkpoint increments is negative; bounded iff |last| < " << format_double(C) << " and |v[m] - v[m-"
      << steps << "]| < " << format_double(bounded_change) << "; else inconclusive";
  return out.str();
}

Verdict classify(std::span<const double> values, const DivergenceRule& rule, bool upward) {
  if (values.size() < rule.steps + 1) return Verdict::inconclusive;
  const double sign = upward ? -1.0 : 1.0;
  const std::size_t m = values.size() - 1;
  const double last = sign * values[m];
  bool decreasing = true;
  for (std::size_t j = m - rule.steps; j < m; ++j)
    if (!(sign * values[j + 1] < sign * values[j])) decreasing = false;
  if (last < -rule.C && decreasing) return Verdict::diverges_toward_criterion;
  if (std::fabs(last) < rule.C && std::fabs(values[m] - values[m - rule.steps]) < rule.bounded_change)
    return Verdict::bounded;
  return Verdict::inconclusive;
}

const std::vector<double>& CriterionReport::values(std::string_view name) const {
  for (const auto& [n, v] : series)
    if (n == name) return v;
  throw InvalidArgument("no series named " + std::string(name) + " in report " + id);
}

nlohmann::json CriterionReport::to_json() const {
  nlohmann::json s = nlohmann::json::object();
  for (const auto& [name, v] : series) s[name] = v;
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& [name, v] : series_verdicts) verdicts[name] = to_string(v);
  return {{"id", id},         {"params", params},          {"checkpoints", checkpoints},
          {"series", s},      {"scalars", scalars},        {"series_verdicts", verdicts},
          {"warnings", warnings}, {"verdict", to_string(verdict)}, {"rule", rule}};
}

std::string CriterionReport::to_csv() const {
  std::string out = "x";
  for (const auto& [name, v] : series) out += "," + name;
  out += "\n";
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    out += std::to_string(checkpoints[i]);
    for (const auto& [name, v] : series) out += "," + format_double(v[i]);
    out += "\n";
  }
  return out;
}

TauGrid::TauGrid() : taus_{-5.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0} {}

TauGrid::TauGrid(std::vector<double> taus) : taus_(std::move(taus)) {
  for (double t : taus_)
    if (!std::isfinite(t)) throw InvalidArgument("tau values must be finite");
  taus_.push_back(0.0);
  std::sort(taus_.begin(), taus_.end());
  taus_.erase(std::unique(taus_.begin(), taus_.end()), taus_.end());
}

TauGrid TauGrid::with_defaults(std::span<const double> extra) {
  std::vector<double> all = TauGrid().values();
  all.insert(all.end(), extra.begin(), extra.end());
  return TauGrid(std::move(all));
}

CriterionReport thm2_diagnostics(const Sequence& seq, const PrimeTable& table) {
  const std::uint64_t n_max = seq.n_max();
  if (n_max < 2) throw InvalidArgument("thm2 diagnostics need n_max >= 2");
  if (n_max > table.limit()) throw InvalidArgument("sequence is longer than the prime table");

  CriterionReport r;
  r.id = "thm2";
  double max_n = 0.0, max_p = 0.0;
  std::uint64_t arg_n = 0, arg_p = 0;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const double v = std::abs(seq[n]);
    if (v > max_n) max_n = v, arg_n = n;
    if (table.is_prime(n) && v > max_p) max_p = v, arg_p = n;
  }
  auto xs = decade_checkpoints(n_max);
  if (xs.empty() || xs.back() != n_max) xs.push_back(n_max);
  PrimeData d;
  for (std::uint32_t p : table.primes()) {
    if (p > n_max) break;
    d.primes.push_back(p);
    d.f.push_back(seq[p]);
  }
  r.checkpoints = xs;
  r.series.emplace_back("sum_abs_f_p", checkpointed(d, xs, [&](std::size_t i) { return std::abs(d.f[i]); }));
  r.scalars = {{"max_abs_f_n", max_n},
               {"argmax_n", static_cast<double>(arg_n)},
               {"max_abs_f_p", max_p},
               {"argmax_p", static_cast<double>(arg_p)},
               {"n_max", static_cast<double>(n_max)}};
  r.params = {{"n_max", n_max}};
  if (seq.spec()) r.params["spec"] = to_json(*seq.spec());

  const bool sup_ok = max_p < 1.0;
  const bool equal = max_n == max_p;
  if (!sup_ok) r.warnings.push_back("sup_p |f(p)| = " + format_double(max_p) + " is not < 1");
  if (!equal)
    r.warnings.push_back("sup_n |f(n)| = " + format_double(max_n) + " differs from sup_p |f(p)| = " +
                         format_double(max_p));
  r.scalars["sup_condition"] = sup_ok ? 1.0 : 0.0;
  r.scalars["sup_equality"] = equal ? 1.0 : 0.0;

  const DivergenceRule rule;
  const Verdict growth = classify(r.values("sum_abs_f_p"), rule, true);
  r.series_verdicts["sum_abs_f_p"] = growth;
  r.verdict = (sup_ok && equal) ? growth : Verdict::not_satisfied;
  r.rule = "not-satisfied if sup_p |f(p)| >= 1 or sup_n |f(n)| != sup_p |f(p)|; otherwise the growth of sum |f(p)| "
           "upward: " +
           rule.describe();
  return r;
}

CriterionReport thm6_sum(const PrimeValueSpec& spec, std::uint64_t P, std::span<const std::uint64_t> checkpoints,
                         const PrimeTable& table) {
  const auto xs = resolve_checkpoints(checkpoints, P, table);
  const auto d = prime_data(spec, P, table);
  CriterionReport r;
  r.id = "thm6";
  r.params = base_params(spec, P, xs);
  r.checkpoints = xs;
  r.series.emplace_back("sum", checkpointed(d, xs, [&](std::size_t i) {
                          const double re = d.f[i].real();
                          return re < 0.0 ? re / d.primes[i] : 0.0;
                        }));
  const DivergenceRule rule;
  r.verdict = r.series_verdicts["sum"] = classify(r.values("sum"), rule);
  r.rule = rule.describe();
  return r;
}

CriterionReport thm7_criterion(const PrimeValueSpec& spec, const TauGrid& grid, std::uint64_t P,
                               std::span<const std::uint64_t> checkpoints, const PrimeTable& table) {
  const auto xs = resolve_checkpoints(checkpoints, P, table);
  const auto d = prime_data(spec, P, table);
  CriterionReport r;
  r.id = "thm7";
  r.params = base_params(spec, P, xs);
  r.params["taus"] = grid.values();
  r.checkpoints = xs;

  std::size_t bad = 0;
  std::uint64_t first_bad = 0;
  for (std::size_t i = 0; i < d.primes.size(); ++i) {
    if (std::abs(1.0 + d.f[i]) > 1.0 + kSlack) {
      if (bad++ == 0) first_bad = d.primes[i];
    }
  }
  if (bad) r.warnings.push_back(prime_note("|1 + f(p)| <= 1", first_bad, bad));
  if (!d.primes.empty() && d.f[0] == cplx{-2.0, 0.0}) r.warnings.push_back("f(2) = -2");

  const DivergenceRule rule;
  bool all_diverge = true, any_bounded = false;
  for (double tau : grid.values()) {
    auto sums = checkpointed(d, xs, [&](std::size_t i) {
      const double theta = tau * std::log(static_cast<double>(d.primes[i]));
      const double h = std::sin(0.5 * theta);
      // Re[(1 + f) p^{-i tau}] - 1 written so that tau = 0 gives Re f exactly.
      return (d.f[i].real() * std::cos(theta) + d.f[i].imag() * std::sin(theta) + (-2.0 * h * h)) / d.primes[i];
    });
    const std::string name = "tau=" + format_double(tau);
    const Verdict v = classify(sums, rule);
    r.series_verdicts[name] = v;
    all_diverge = all_diverge && v == Verdict::diverges_toward_criterion;
    any_bounded = any_bounded || v == Verdict::bounded;
    r.series.emplace_back(name, std::move(sums));
  }
  r.verdict = all_diverge ? Verdict::diverges_toward_criterion
                          : (any_bounded ? Verdict::bounded : Verdict::inconclusive);
  r.rule = "per tau: " + rule.describe() +
           "; overall diverges iff every grid tau diverges, bounded if some tau is bounded. Only the finite tau grid "
           "is examined.";
  return r;
}

CriterionReport thm8_criterion(const PrimeValueSpec& spec, std::uint64_t P, std::span<const std::uint64_t> checkpoints,
                               const PrimeTable& table) {
  const auto xs = resolve_checkpoints(checkpoints, P, table);
  const auto d = prime_data(spec, P, table);
  CriterionReport r;
  r.id = "thm8";
  r.params = base_params(spec, P, xs);
  r.checkpoints = xs;
  std::size_t big = 0, pos = 0;
  std::uint64_t first_big = 0, first_pos = 0;
  for (std::size_t i = 0; i < d.primes.size(); ++i) {
    if (std::abs(d.f[i]) > 1.0 + kSlack && big++ == 0) first_big = d.primes[i];
    if (d.f[i].real() > 0.0 && pos++ == 0) first_pos = d.primes[i];
  }
  if (big) r.warnings.push_back(prime_note("|f(p)| <= 1", first_big, big));
  if (pos) r.warnings.push_back(prime_note("Re f(p) <= 0", first_pos, pos));
  r.series.emplace_back("sum", checkpointed(d, xs, [&](std::size_t i) { return d.f[i].real() / d.primes[i]; }));
  const DivergenceRule rule;
  r.verdict = r.series_verdicts["sum"] = classify(r.values("sum"), rule);
  r.rule = rule.describe();
  return r;
}

CriterionReport thm9_density(const PrimeValueSpec& spec, std::span<const std::uint64_t> xs_in, const PrimeTable& table,
                             double margin) {
  if (xs_in.empty()) throw InvalidArgument("thm9 needs at least one x");
  if (xs_in.front() < 2) throw InvalidArgument("thm9 needs x >= 2");
  const auto xs = resolve_checkpoints(xs_in, xs_in.back(), table);
  const auto d = prime_data(spec, xs.back(), table);
  CriterionReport r;
  r.id = "thm9";
  r.params = base_params(spec, xs.back(), xs);
  r.params["margin"] = margin;
  r.checkpoints = xs;
  std::size_t big = 0;
  std::uint64_t first_big = 0;
  for (std::size_t i = 0; i < d.primes.size(); ++i)
    if (std::abs(d.f[i]) > 1.0 + kSlack && big++ == 0) first_big = d.primes[i];
  if (big) r.warnings.push_back(prime_note("|f(p)| <= 1", first_big, big));

  auto num = checkpointed(d, xs, [&](std::size_t i) { return std::norm(1.0 + d.f[i]); });
  std::vector<double> ratio(xs.size());
  double tail_max = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = static_cast<double>(xs[i]);
    ratio[i] = num[i] / (x / std::log(x));
    if (xs[i] * 1000 >= xs.back()) tail_max = std::max(tail_max, ratio[i]);
  }
  r.series.emplace_back("numerator", std::move(num));
  r.series.emplace_back("ratio", ratio);
  r.scalars["tail_max_ratio"] = tail_max;
  r.verdict = tail_max < 1.0 - margin ? Verdict::satisfied : Verdict::not_satisfied;
  r.rule = "satisfied iff max ratio over x >= x_last/1000 is < 1 - " + format_double(margin);
  return r;
}

IntegralResult thm9p_integral(const PrimeValueSpec& spec, std::uint64_t P, double quad_tol, const PrimeTable& table) {
  if (P < 2 || P > table.limit()) throw InvalidArgument("prime bound P must be in [2, table limit]");
  if (!(quad_tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
  const auto d = prime_data(spec, P, table);
  std::vector<double> w, lp;
  for (std::size_t i = 0; i < d.primes.size(); ++i) {
    const double wi = std::norm(1.0 + d.f[i]);
    if (wi == 0.0) continue;
    w.push_back(wi);
    lp.push_back(std::log(static_cast<double>(d.primes[i])));
  }
  auto integrand = [&](double v) {
    const double sigma = 1.0 + v * v;
    CompensatedSum s;
    for (std::size_t i = 0; i < w.size(); ++i) s.add(w[i] * std::exp(-sigma * lp[i]));
    return 2.0 * std::exp(0.5 * s.value());
  };
  QuadratureStats stats;
  const double value = adaptive_simpson(integrand, 0.0, 1.0, quad_tol, 40, stats);
  return {value, stats.evaluations, !stats.depth_exhausted};
}

CriterionReport thm9p_scan(const PrimeValueSpec& spec, std::span<const std::uint64_t> Ps, double quad_tol,
                           const PrimeTable& table) {
  if (Ps.empty()) throw InvalidArgument("thm9p scan needs at least one P");
  const auto xs = resolve_checkpoints(Ps, Ps.back(), table);
  CriterionReport r;
  r.id = "thm9p";
  r.params = {{"spec", to_json(spec)}, {"Ps", xs}, {"quad_tol", quad_tol}};
  r.checkpoints = xs;
  std::vector<double> values;
  for (std::uint64_t P : xs) {
    const auto res = thm9p_integral(spec, P, quad_tol, table);
    if (!res.converged) r.warnings.push_back("quadrature depth exhausted at P = " + std::to_string(P));
    values.push_back(res.value);
  }
  r.verdict = Verdict::inconclusive;
  if (values.size() >= 4) {
    const std::size_t m = values.size() - 1;
    bool flat = true, growing = true;
    for (std::size_t j = m - 3; j < m; ++j) {
      const double rel = (values[j + 1] - values[j]) / std::fabs(values[j]);
      flat = flat && std::fabs(rel) < 1e-3;
      growing = growing && rel >= 0.01;
    }
    if (flat) r.verdict = Verdict::satisfied;
    if (growing) r.verdict = Verdict::not_satisfied;
  }
  r.series.emplace_back("integral", std::move(values));
  r.series_verdicts["integral"] = r.verdict;
  r.rule = "satisfied iff the last three relative changes are < 1e-3; not-satisfied iff each of them is >= 1e-2";
  return r;
}

PrimeValueSpec build_perturbation(const PrimeValueSpec& base, const std::map<std::uint64_t, cplx>& delta,
                                  const PrimeTable& table, std::uint64_t check_limit) {
  const PrimeValues g(base);
  for (const auto& [p, dv] : delta) {
    if (!is_prime_checked(p, table)) throw InvalidPerturbation("delta key " + std::to_string(p) + " is not prime");
    const double m = std::abs(g.at_prime(p) + dv);
    if (!(m < 1.0))
      throw InvalidPerturbation("perturbed |f(" + std::to_string(p) + ")| = " + format_double(m) + " is not < 1");
  }
  for (std::uint32_t p : table.primes()) {
    if (p > check_limit) break;
    if (delta.count(p)) continue;
    const double m = std::abs(g.at_prime(p));
    if (!(m < 1.0))
      throw InvalidPerturbation("base |f(" + std::to_string(p) + ")| = " + format_double(m) + " is not < 1");
  }
  PrimeValueSpec out;
  out.kind = spec::Perturbed{std::make_shared<const PrimeValueSpec>(base), delta};
  out.mode = base.mode;
  return out;
}

CriterionReport compare_partial_sums(const Sequence& f, const Sequence& g, std::span<const std::uint64_t> checkpoints) {
  const auto a = partial_sums(f, Weight::one, checkpoints);
  const auto b = partial_sums(g, Weight::one, checkpoints);
  CriterionReport r;
  r.id = "perturbation-compare";
  r.checkpoints = a.checkpoints;
  std::vector<double> fr, fi, gr, gi, diff;
  for (std::size_t i = 0; i < a.sums.size(); ++i) {
    fr.push_back(a.sums[i].real());
    fi.push_back(a.sums[i].imag());
    gr.push_back(b.sums[i].real());
    gi.push_back(b.sums[i].imag());
    diff.push_back(std::abs(a.sums[i] - b.sums[i]));
  }
  r.series = {{"f_re", fr}, {"f_im", fi}, {"g_re", gr}, {"g_im", gi}, {"diff_abs", diff}};
  if (f.spec()) r.params["f"] = to_json(*f.spec());
  if (g.spec()) r.params["g"] = to_json(*g.spec());
  r.rule = "raw partial sums only; no verdict";
  return r;
}

}  // namespace cmo
