#include <doctest.h>

#include <cmath>

#include "cmo/analytic.hpp"
#include "cmo/errors.hpp"
#include "cmo/inversion.hpp"

using namespace cmo;

namespace {

const PrimeTable& table() {
  static const PrimeTable t(1'000'000);
  return t;
}

Sequence square_indicator(std::uint64_t N) {
  std::vector<cplx> v(N);
  for (std::uint64_t k = 1; k * k <= N; ++k) v[k * k - 1] = 1.0;
  return Sequence(std::move(v), Multiplicativity::multiplicative);
}

cplx direct_F(const Sequence& f, std::uint64_t x) {
  cplx s = 0;
  for (std::uint64_t n = 1; n <= x; ++n) s += f[n];
  return s;
}

}  // namespace

TEST_SUITE("inversion") {

TEST_CASE("hyperbola identity matches direct sums") {
  const auto& t = table();
  const std::uint64_t N = 10'000;
  const auto mu = build_mult_sequence(PrimeValueSpec::mobius(), N, t);
  const auto lam = build_cm_sequence(PrimeValueSpec::liouville(), N, t);
  const auto d = delta_one(N);
  const auto sq = square_indicator(N);
  CHECK(hyperbola_F(d, 10'000, 50, t) == cplx{-23, 0});
  CHECK(hyperbola_F(sq, 10'000, 50, t) == direct_F(lam, 10'000));
  CHECK(hyperbola_F(d, 4, 2, t) == direct_F(mu, 4));
  CHECK(hyperbola_F(sq, 4, 2, t) == direct_F(lam, 4));

  // All x <= 1e4 would be slow with the direct sum in the loop; walk a prefix instead.
  cplx Fmu = 0, Flam = 0;
  for (std::uint64_t x = 1; x <= N; ++x) {
    Fmu += mu[x];
    Flam += lam[x];
    if (x < 4 || (x > 2000 && x % 97 != 0)) continue;
    const double xd = static_cast<double>(x);
    for (double y : {std::ceil(std::sqrt(xd)), xd / 4, 2.0}) {
      if (!(xd >= 2 * y && y >= 2)) continue;
      REQUIRE(hyperbola_F(d, xd, y, t) == Fmu);
      REQUIRE(hyperbola_F(sq, xd, y, t) == Flam);
    }
    REQUIRE(hyperbola_F(d, xd, t) == Fmu);
  }
}

TEST_CASE("hyperbola argument checks") {
  const auto& t = table();
  const auto d = delta_one(100);
  CHECK_THROWS_AS(hyperbola_F(d, 5, 3, t), InvalidArgument);
  CHECK_THROWS_AS(hyperbola_F(d, 10, 1.5, t), InvalidArgument);
  CHECK_THROWS_AS(hyperbola_F(d, 1000, 10, t), InvalidArgument);
  CHECK(hyperbola_default_y(10'000) == 100);
  CHECK(hyperbola_default_y(5) == 2);
}

TEST_CASE("thm10 residuals for mobius") {
  const auto& t = table();
  const std::uint64_t N = 1'000'000;
  const auto mu = build_mult_sequence(PrimeValueSpec::mobius(), N, t);
  const auto d = delta_one(N);
  const std::uint64_t xs[] = {1, 10, 1000, 100'000, 1'000'000};
  const auto r = verify_thm10(mu, d, InversionModel::zero(), xs);
  CHECK(r.kappa == cplx{1, 0});
  CHECK(r.conventions.size() == 1);
  // At x = 1 the left side is f(1) = 1 and the right side F(1) + G(1) = 2.
  CHECK(r.lhs[0] == cplx{1, 0});
  CHECK(r.rhs[0] == cplx{2, 0});
  CHECK(r.residuals[0] == 1.0);
  CHECK(r.residuals.back() < 1e-3);
  REQUIRE(r.trend_consistent.has_value());
  CHECK(*r.trend_consistent);
  for (std::size_t i = 0; i < r.xs.size(); ++i) CHECK(r.residuals[i] == std::abs(r.lhs[i] - r.rhs[i]));
}

TEST_CASE("thm10 for liouville") {
  const auto& t = table();
  const std::uint64_t N = 1'000'000;
  const auto lam = build_cm_sequence(PrimeValueSpec::liouville(), N, t);
  const auto g = dirichlet_convolve(lam, constant_one(N), N);
  for (std::uint64_t n = 1; n <= 1000; ++n) REQUIRE(g[n] == square_indicator(1000)[n]);
  const std::uint64_t xs[] = {10, 1000, 100'000, 1'000'000};
  const auto r = verify_thm10(lam, g, InversionModel::zero(), xs);
  CHECK(*r.trend_consistent);
  CHECK_THROWS_AS(verify_thm10(lam, delta_one(N), InversionModel::zero(), xs), InvalidArgument);
}

TEST_CASE("thm11 mertens case") {
  const auto& t = table();
  const std::uint64_t N = 1'000'000;
  const auto mu = build_mult_sequence(PrimeValueSpec::mobius(), N, t);
  const auto d = delta_one(N);
  const std::uint64_t xs[] = {1, 10, 10'000, 1'000'000};
  const auto r = verify_thm11(mu, d, InversionModel::zero(), xs);
  CHECK(r.kappa == cplx{0, 0});
  CHECK(r.residuals[0] == 1.0);
  CHECK(r.residuals[2] == doctest::Approx(23e-4));
  CHECK(r.residuals[3] == doctest::Approx(212e-6));
  CHECK(r.max_abs_g == 1.0);
  CHECK(*r.trend_consistent);
}

TEST_CASE("nonzero tau uses zeta on the one-line") {
  const auto& t = table();
  const std::uint64_t N = 10'000;
  const auto mu = build_mult_sequence(PrimeValueSpec::mobius(), N, t);
  const std::uint64_t xs[] = {100, 10'000};
  const auto r10 = verify_thm10(mu, delta_one(N), InversionModel::zero(2.0), xs);
  CHECK(std::abs(r10.kappa - 1.0 / (cplx{0, 2} * zeta(cplx{1, 2}))) < 1e-14);
  const auto r11 = verify_thm11(mu, delta_one(N), InversionModel::zero(2.0), xs);
  CHECK(std::abs(r11.kappa - 1.0 / zeta(cplx{1, 2})) < 1e-14);
}

TEST_CASE("residual reports are reproducible") {
  const auto& t = table();
  const auto mu = build_mult_sequence(PrimeValueSpec::mobius(), 100'000, t);
  const std::uint64_t xs[] = {10, 1000, 100'000};
  const auto a = verify_thm11(mu, delta_one(100'000), InversionModel::zero(), xs);
  const auto b = verify_thm11(mu, delta_one(100'000), InversionModel::zero(), xs);
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_csv().rfind("x,lhs_re,lhs_im,rhs_re,rhs_im,residual\n10,", 0) == 0);
  CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("estimate L") {
  const std::uint64_t N = 100'000;
  const std::uint64_t xs[] = {10, 1000, 10'000};
  const auto d = estimate_L(delta_one(N), 0.0, xs);
  CHECK(d.kind == InversionModel::Kind::empirical);
  CHECK(std::abs(d.L_hat[2] - 1e-4) < 1e-15);
  const auto one = estimate_L(constant_one(N), 0.0, xs);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(one.L_hat[i] - 1.0) < 1e-12);
  CHECK(one.continuity[2] < 1e-3);
  CHECK(one.truncated.empty());

  const double tau0 = 1.5;
  std::vector<cplx> v(N);
  for (std::uint64_t n = 1; n <= N; ++n) v[n - 1] = std::exp(cplx{0, tau0 * std::log(double(n))});
  const Sequence tw(std::move(v), Multiplicativity::complete);
  const std::uint64_t big[] = {1000, 30'000};
  const auto m = estimate_L(tw, tau0, big);
  CHECK(std::abs(m.L_hat[1] - 1.0 / cplx{1, tau0}) < 1e-3);
  const std::uint64_t edge[] = {90'000};
  CHECK(estimate_L(tw, tau0, edge).truncated.size() == 1);
}

}
