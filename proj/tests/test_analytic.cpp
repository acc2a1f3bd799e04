#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cmo/analytic.hpp"
#include "cmo/errors.hpp"

using namespace cmo;
using cd = std::complex<double>;

namespace {

const PrimeTable& table() {
  static const PrimeTable t(1'000'000);
  return t;
}

// Reference values from an independent 30-digit evaluation.
struct HurwitzCase {
  cd s;
  double alpha;
  cd value;
};

const HurwitzCase kHurwitz[] = {
    {{0.5, 50}, 1.0, {-0.081712108320979975048, 0.33079219403866129559}},
    {{0.3, 20}, 0.25, {-2.6757016041025153375, 2.8414958710707072142}},
    {{-0.5, 3}, 0.75, {0.11057986636669992767, 0.37810760079259047771}},
    {{1, 1000}, 1.0, {0.9409368682927533108, 0.045226652072095099089}},
    {{1.5, 3}, 1.0, {0.71983412483453084597, -0.11844908318875969628}},
    {{0.9, -7}, 0.1, {-6.4265681602565784296, 3.4669203524289578884}},
};

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("hurwitz zeta reference values") {
  for (const auto& c : kHurwitz) {
    const cd v = hurwitz_zeta(c.s, c.alpha);
    CAPTURE(c.s);
    CHECK(std::abs(v - c.value) < 1e-11 * std::max(1.0, std::abs(c.value)));
  }
}

TEST_CASE("riemann zeta") {
  CHECK(std::abs(zeta(2.0) - 1.64493406684822643647) < 1e-13);
  CHECK(std::abs(1.0 / zeta(cd{1, 1}) - cd{0.485959358810377904, 0.773691485484871530}) < 1e-12);
  CHECK(std::abs(zeta(0.0) + 0.5) < 1e-13);
  CHECK(std::abs(zeta(-1.0) + 1.0 / 12.0) < 1e-13);
  CHECK_THROWS_AS(zeta(1.0), PoleError);
}

TEST_CASE("validity window") {
  CHECK_THROWS_AS(hurwitz_zeta(cd{2, 2000}, 1.0), InvalidArgument);
  CHECK_THROWS_AS(hurwitz_zeta(cd{-2, 0}, 1.0), InvalidArgument);
  CHECK_THROWS_AS(hurwitz_zeta(cd{2, 0}, 0.0), InvalidArgument);
  CHECK_THROWS_AS(hurwitz_zeta(cd{2, 0}, 1.5), InvalidArgument);
  CHECK(euler_maclaurin_shift(cd{0.5, 10}) == 25);
  CHECK(euler_maclaurin_shift(cd{0.5, 300.2}) == 301);
}

TEST_CASE("hurwitz q-splitting identity") {
  const cd points[] = {{2, 0}, {0.5, 14}, {0.25, -3}, {1.5, 40}, {-0.5, 7}, {3, 1}};
  for (unsigned q : {2u, 3u, 5u}) {
    for (const cd s : points) {
      for (double alpha : {1.0, 0.3}) {
        // zeta(s, alpha) = q^{-s} sum_{j<q} zeta(s, (alpha + j)/q)
        cd sum = 0;
        for (unsigned j = 0; j < q; ++j) sum += hurwitz_zeta(s, (alpha + j) / q);
        sum *= std::exp(-s * std::log(double(q)));
        CAPTURE(q);
        CAPTURE(s);
        CHECK(std::abs(sum - hurwitz_zeta(s, alpha)) < 1e-10 * std::max(1.0, std::abs(sum)));
      }
    }
  }
}

TEST_CASE("regular part at s = 1") {
  // zeta(s, alpha) - 1/(s-1) -> -digamma(alpha); digamma(1) = -gamma.
  CHECK(std::abs(hurwitz_zeta_regular(1.0, 1.0) - 0.57721566490153286061) < 1e-12);
  const cd s{1.3, 2};
  CHECK(std::abs(hurwitz_zeta_regular(s, 0.4) - (hurwitz_zeta(s, 0.4) - 1.0 / (s - 1.0))) < 1e-12);
}

TEST_CASE("dirichlet L-functions") {
  const auto chi4 = make_character(4, 1);
  CHECK(std::abs(l_function(chi4, 1.0) - std::numbers::pi / 4) < 1e-13);
  CHECK(std::abs(l_function(chi4, cd{0.5, 2}) - cd{1.07886879376793517759, 0.401275195395870261434}) < 1e-12);
  const auto chi5 = make_character(5, 1);
  CHECK(std::abs(l_function(chi5, cd{0.7, 3}) - cd{1.80445579611137688558, 0.0784102370642019831978}) < 1e-12);
  CHECK(std::abs(l_function(chi4, cd{0.5, 6.02094890469759665490})) < 1e-12);
  CHECK(std::abs(l_function(make_character(3, 1), cd{0.5, 8.03973715568146668171})) < 1e-12);
  CHECK_THROWS_AS(l_function(make_character(4, 0), 1.0), PoleError);
  // Principal character mod q: zeta(s) prod_{p | q} (1 - p^{-s}).
  const cd s{2, 1};
  const cd expect = zeta(s) * (1.0 - std::exp(-s * std::log(2.0))) * (1.0 - std::exp(-s * std::log(3.0)));
  CHECK(std::abs(l_function(make_character(6, 0), s) - expect) < 1e-12);
}

TEST_CASE("euler product and series agree") {
  const auto& t = table();
  const double closed = 0.657973626739290574589;
  const cd prod = euler_product(PrimeValueSpec::liouville(), 2.0, 1'000'000, t);
  CHECK(std::abs(prod - closed) < 1e-6);
  const auto seq = build_cm_sequence(PrimeValueSpec::liouville(), 1'000'000, t);
  const cd series = dirichlet_series_partial(seq, 2.0, 1'000'000);
  CHECK(std::abs(series - closed) < 1e-5);
  // Prime-power mode: the mobius product is 1/zeta.
  const cd mu = euler_product(PrimeValueSpec::mobius(), 2.0, 1'000'000, t);
  CHECK(std::abs(mu - 0.607927101854026628663) < 1e-6);
  CHECK_THROWS_AS(euler_product(PrimeValueSpec::liouville(), 1.0, 1000, t), InvalidArgument);
  CHECK_THROWS_AS(euler_product(PrimeValueSpec::constant(4.0), 2.0, 1000, t), NumericError);
  std::vector<std::string> warnings;
  euler_product(PrimeValueSpec::constant(1.5), 3.0, 100, t, &warnings);
  CHECK_FALSE(warnings.empty());
}

TEST_CASE("abel scan") {
  const auto& t = table();
  const double sigmas[] = {2.0, 1.1};
  const auto pts = abel_limit_scan(PrimeValueSpec::liouville(), sigmas, 200'000, t);
  REQUIRE(pts.size() == 2);
  REQUIRE(pts[1].closed_form.has_value());
  CHECK(std::abs(pts[0].series - *pts[0].closed_form) < 1e-5);
  CHECK(std::abs(pts[1].closed_form->real() - 0.140823894739783382497) < 1e-12);
  const auto none = abel_limit_scan(PrimeValueSpec::character(4, 1), sigmas, 1000, t);
  CHECK_FALSE(none[0].closed_form.has_value());
}

}
