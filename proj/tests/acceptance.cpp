// Acceptance checks: one PASS/FAIL line per criterion, with timing.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cmo/analytic.hpp"
#include "cmo/characters.hpp"
#include "cmo/criteria.hpp"
#include "cmo/inversion.hpp"
#include "cmo/prime_table.hpp"
#include "cmo/sequence.hpp"
#include "cmo/window.hpp"
#include "cmo/zerofinder.hpp"

using namespace cmo;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  const char* name;
  double budget_s;
  std::function<Outcome()> check;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const PrimeTable& table_1e7() {
  static const PrimeTable t(10'000'000);
  return t;
}

Outcome euler_example() {
  const PrimeTable t(1'000'000);
  const auto lam = build_cm_sequence(PrimeValueSpec::liouville(), 1'000'000, t);
  const auto rep = partial_sums(lam, Weight::inverse_n, decade_checkpoints(1'000'000));
  std::vector<double> a;
  for (const auto& z : rep.sums) a.push_back(std::abs(z));
  bool trend = true;
  for (std::size_t k = 2; k < a.size(); ++k) trend = trend && a[k] <= std::max(a[k - 1], a[k - 2]);
  return {a.back() < 0.02 && trend, fmt("|S(1e6)| = %.6g, decade trend ", a.back()) + (trend ? "ok" : "broken")};
}

Outcome mobius_analogue() {
  const PrimeTable t(1'000'000);
  const auto mu = build_mult_sequence(PrimeValueSpec::mobius(), 1'000'000, t);
  const std::uint64_t xs[] = {1'000'000};
  const double v = std::abs(partial_sums(mu, Weight::inverse_n, xs).sums[0]);
  return {v < 0.01, fmt("|sum mu(n)/n| = %.6g", v)};
}

Outcome two_routes() {
  const PrimeTable t(1'000'000);
  const double closed = 0.657973626739290574589;
  const auto lam = build_cm_sequence(PrimeValueSpec::liouville(), 1'000'000, t);
  const cd series = dirichlet_series_partial(lam, 2.0, 1'000'000);
  const cd product = euler_product(PrimeValueSpec::liouville(), 2.0, 1'000'000, t);
  const double d1 = std::abs(series - product), d2 = std::abs(series - closed), d3 = std::abs(product - closed);
  return {d1 < 1e-5 && d2 < 1e-5 && d3 < 1e-5, fmt("|series-product| = %.3g, |series-closed| = %.3g, |product-closed| = %.3g", d1, d2, d3)};
}

Outcome window_method() {
  const WindowParams p{std::log(1e4), 0.05};
  const double T = window_required_T(BoundaryModel::liouville, p, 1e-4);
  const auto r = window_sum(BoundaryModel::liouville, p, T, 1e-4);
  const PrimeTable t(10'000);
  const auto lam = build_cm_sequence(PrimeValueSpec::liouville(), 10'000, t);
  const std::uint64_t xs[] = {10'000};
  const double direct = partial_sums(lam, Weight::inverse_n, xs).sums[0].real();
  const double err = std::fabs(r.value - direct);
  return {err < 5 * p.a + 1e-4, fmt("window %.8f vs sieved %.8f (T = %.0f)", r.value, direct, T) +
                                    fmt(", |diff| = %.3g < %.4g", err, 5 * p.a + 1e-4)};
}

Outcome window_plateau() {
  const WindowParams p{std::log(1e4), 0.05};
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const double u = -(p.x - 2 * p.a) + i * 2 * (p.x - 2 * p.a) / 49.0;
    worst = std::max(worst, std::fabs(window_weight(p, u) - 1.0));
  }
  for (int i = 0; i < 50; ++i) {
    const double off = p.x + 2 * p.a + i * 0.1;
    worst = std::max(worst, std::fabs(window_weight(p, i % 2 ? off : -off)));
  }
  return {worst < 1e-6, fmt("max |w - {1,0}| over 100 samples = %.3g", worst)};
}

Outcome dirichlet_riemann() {
  const auto chi = make_character(4, 1);
  const auto res = locate_zeros(chi, 0, 10);
  if (res.zeros.empty()) return {false, "no zero found"};
  const auto& z = res.zeros[0];
  const double resid = std::abs(l_function(chi, z.rho));
  const auto seq = build_cm_sequence(cmo_from_zero(chi, z.rho), 10'000'000, table_1e7());
  const std::uint64_t xs[] = {1000, 100'000, 10'000'000};
  const auto sums = partial_sums(seq, Weight::one, xs).sums;
  const double a = std::abs(sums[0]), b = std::abs(sums[1]), c = std::abs(sums[2]);
  const bool ok = resid < 1e-8 && a > b && b > c;
  return {ok, fmt("rho = 0.5 + %.10fi, residual %.2g", z.rho.imag(), resid) +
                  fmt(", |S| at 1e3/1e5/1e7 = %.3g / %.3g / %.3g", a, b, c)};
}

Outcome hyperbola() {
  const PrimeTable t(10'000);
  const std::uint64_t N = 10'000;
  const auto mu = build_mult_sequence(PrimeValueSpec::mobius(), N, t);
  const auto lam = build_cm_sequence(PrimeValueSpec::liouville(), N, t);
  int checked = 0, bad = 0;
  for (const auto* f : {&mu, &lam}) {
    const auto g = dirichlet_convolve(*f, constant_one(N), N);
    for (double x : {100.0, 1000.0, 10'000.0}) {
      cd direct = 0;
      for (std::uint64_t n = 1; n <= x; ++n) direct += (*f)[n];
      for (double y : {std::ceil(std::sqrt(x)), x / 4, 2.0}) {
        ++checked;
        if (hyperbola_F(g, x, y, t) != direct) ++bad;
      }
    }
  }
  return {bad == 0 && checked == 18, fmt("%.0f of %.0f exact matches", checked - bad, checked)};
}

Outcome mertens_special_case() {
  const PrimeTable t(1'000'000);
  const auto mu = build_mult_sequence(PrimeValueSpec::mobius(), 1'000'000, t);
  const std::uint64_t xs[] = {1'000'000};
  const auto r = verify_thm11(mu, delta_one(1'000'000), InversionModel::zero(), xs);
  return {r.residuals[0] < 1e-3, fmt("|M(1e6)|/1e6 = %.6g", r.residuals[0])};
}

Outcome criteria_coherence() {
  const auto& t = table_1e7();
  const auto spec = PrimeValueSpec::constant(-1.0);
  const auto xs = decade_checkpoints(10'000'000);
  const auto r8 = thm8_criterion(spec, 10'000'000, xs, t);
  const auto r9 = thm9_density(spec, xs, t);
  bool zero = true;
  for (double v : r9.values("ratio")) zero = zero && v == 0.0;
  const double i9p = thm9p_integral(spec, 10'000'000, 1e-12, t).value;
  const auto r7 = thm7_criterion(spec, TauGrid(), 10'000'000, xs, t);
  bool all7 = true;
  for (const auto& [name, v] : r7.series_verdicts) all7 = all7 && v == Verdict::diverges_toward_criterion;
  const bool ok = r8.verdict == Verdict::diverges_toward_criterion && zero && std::fabs(i9p - 2.0) <= 1e-9 && all7 &&
                  r7.series_verdicts.size() == TauGrid().values().size();
  return {ok, "thm8 " + std::string(to_string(r8.verdict)) + ", thm9 ratio " + (zero ? "0" : "nonzero") +
                  fmt(", thm9p %.12f", i9p) + ", thm7 " + (all7 ? "all tau diverge" : "some tau not divergent")};
}

Outcome property_suites() {
  std::vector<std::string> failed;
  {
    const PrimeTable t(100'000);
    const auto seq = build_cm_sequence(PrimeValueSpec::random_unit_circle(11), 100'000, t);
    std::mt19937_64 rng(1);
    int n = 0;
    bool ok = true;
    while (n < 10'000) {
      const std::uint64_t a = 1 + rng() % 1000, b = 1 + rng() % 1000;
      if (a * b > 100'000) continue;
      ++n;
      ok = ok && std::abs(seq[a * b] - seq[a] * seq[b]) < 1e-12;
    }
    if (!ok) failed.push_back("multiplicativity");
  }
  {
    const std::uint64_t N = 2000;
    std::mt19937_64 rng(2);
    std::vector<cd> av(N), bv(N);
    for (auto& z : av) z = double(rng() % 7) - 3.0;
    for (auto& z : bv) z = double(rng() % 7) - 3.0;
    const Sequence a(av, Multiplicativity::none), b(bv, Multiplicativity::none);
    const auto c = dirichlet_convolve(a, b, N);
    bool ok = true;
    for (std::uint64_t n = 1; n <= N; ++n) {
      cd s = 0;
      for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) s += a[d] * b[n / d];
      ok = ok && s == c[n];
    }
    if (!ok) failed.push_back("convolution");
  }
  {
    bool ok = true;
    for (std::uint64_t q = 1; q <= 50; ++q) {
      const auto all = enumerate_characters(q);
      std::uint64_t phi = 0;
      for (std::uint64_t a = 1; a <= q; ++a) phi += std::gcd(a, q) == 1;
      ok = ok && all.size() == phi;
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          cd s = 0;
          for (std::uint64_t a = 0; a < q; ++a) s += all[i](a) * std::conj(all[j](a));
          ok = ok && std::abs(s - (i == j ? double(phi) : 0.0)) < 1e-9;
        }
    }
    if (!ok) failed.push_back("orthogonality");
  }
  {
    bool ok = true;
    for (unsigned q : {2u, 3u, 5u})
      for (cd s : {cd{2, 0}, cd{0.5, 14}, cd{-0.5, 7}, cd{1.5, 40}}) {
        cd sum = 0;
        for (unsigned j = 1; j <= q; ++j) sum += hurwitz_zeta(s, double(j) / q);
        sum *= std::exp(-s * std::log(double(q)));
        ok = ok && std::abs(sum - zeta(s)) < 1e-10 * std::max(1.0, std::abs(sum));
      }
    if (!ok) failed.push_back("hurwitz splitting");
  }
  {
    bool ok = true;
    for (std::uint64_t q : {3u, 4u, 5u, 7u})
      for (const auto& chi : enumerate_characters(q)) {
        if (chi.principal()) continue;
        for (SearchRectangle r : {SearchRectangle{0.1, 0.9, 0, 10}, SearchRectangle{0.2, 0.8, -15, 5}}) {
          WindingOptions finer;
          finer.extra_halvings = 1;
          ok = ok && count_zeros_rectangle(chi, r) == count_zeros_rectangle(chi, r, finer);
        }
      }
    if (!ok) failed.push_back("winding stability");
  }
  std::string detail = failed.empty() ? "all five suites green" : "failed:";
  for (const auto& f : failed) detail += " " + f;
  return {failed.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"euler-example", 10, euler_example},
      {"mobius-analogue", 10, mobius_analogue},
      {"euler-product-two-routes", 10, two_routes},
      {"window-sum-method", 60, window_method},
      {"window-kernel-plateau", 0, window_plateau},
      {"dirichlet-riemann-example", 120, dirichlet_riemann},
      {"hyperbola-oracle", 5, hyperbola},
      {"mertens-special-case", 10, mertens_special_case},
      {"criteria-coherence", 0, criteria_coherence},
      {"property-suites", 0, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass;
    std::string timing = fmt("%.2fs", dt);
    if (c.budget_s > 0) {
      timing += fmt(" / %.0fs budget", c.budget_s);
      if (dt > c.budget_s) {
        pass = false;
        o.detail += "; over time budget";
      }
    }
    failures += !pass;
    std::printf("%s %-28s %-22s %s\n", pass ? "PASS" : "FAIL", c.name, timing.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
