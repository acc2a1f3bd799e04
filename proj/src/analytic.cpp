#include "cmo/analytic.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "cmo/compensated_sum.hpp"
#include "cmo/errors.hpp"
#include "zeta_internal.hpp"

namespace cmo {
namespace {

using cd = std::complex<double>;
using detail::power_neg;

// B_{2k} / (2k)! for k = 1..10.
constexpr std::array<double, kEulerMaclaurinBernoulliTerms> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

void check_window(cd s, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("Hurwitz parameter alpha must lie in (0, 1]");
  if (!(s.real() >= kZetaMinSigma) || !(std::abs(s.imag()) <= kZetaMaxAbsT) || !std::isfinite(s.real())) {
    std::ostringstream msg;
    msg << "s = " << s << " outside the zeta validity window (sigma >= -1, |t| <= 1000)";
    throw InvalidArgument(msg.str());
  }
}

// (e^z - 1) / z
cd expm1_over(cd z) {
  if (std::abs(z) < 1e-3) {
    cd term = 1.0, sum = 0.0;
    for (int k = 1; k <= 8; ++k) {
      sum += term;
      term *= z / static_cast<double>(k + 1);
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

// Euler-Maclaurin with either the full pole term w^{1-s}/(s-1) or, when
// `regular`, that term minus 1/(s-1).
cd hurwitz_impl(cd s, double alpha, bool regular) {
  check_window(s, alpha);
  const unsigned N = euler_maclaurin_shift(s);
  ComplexCompensatedSum acc;
  for (unsigned n = 0; n < N; ++n) acc.add(power_neg(n + alpha, s));
  acc.add(detail::euler_maclaurin_tail(s, N + alpha, regular));
  return acc.value();
}

}  // namespace

namespace detail {

std::complex<double> power_neg(double base, std::complex<double> s) {
  const double lb = std::log(base);
  const double mag = std::exp(-s.real() * lb);
  const double ang = -s.imag() * lb;
  return {mag * std::cos(ang), mag * std::sin(ang)};
}

std::complex<double> euler_maclaurin_tail(std::complex<double> s, double w, bool regular) {
  const double logw = std::log(w);
  const cd w_neg_s = power_neg(w, s);
  cd tail = regular ? -logw * expm1_over((1.0 - s) * logw) : w * w_neg_s / (s - 1.0);
  tail += 0.5 * w_neg_s;
  cd poch = s;
  cd wpow = w_neg_s / w;
  const double inv_w2 = 1.0 / (w * w);
  for (unsigned k = 1; k <= kEulerMaclaurinBernoulliTerms; ++k) {
    tail += kBernoulliOverFactorial[k - 1] * poch * wpow;
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    wpow *= inv_w2;
  }
  return tail;
}

std::complex<double> zeta_unchecked(std::complex<double> s) {
  const unsigned N = euler_maclaurin_shift(s);
  ComplexCompensatedSum acc;
  for (unsigned n = 1; n <= N; ++n) acc.add(power_neg(n, s));
  acc.add(euler_maclaurin_tail(s, N + 1.0, false));
  return acc.value();
}

}  // namespace detail

unsigned euler_maclaurin_shift(std::complex<double> s) {
  return std::max(kEulerMaclaurinMinShift, static_cast<unsigned>(std::ceil(std::abs(s.imag()))));
}

std::complex<double> hurwitz_zeta(std::complex<double> s, double alpha) {
  if (s == cd{1.0, 0.0}) throw PoleError("zeta(s, alpha) has a pole at s = 1");
  return hurwitz_impl(s, alpha, false);
}

std::complex<double> hurwitz_zeta_regular(std::complex<double> s, double alpha) {
  return hurwitz_impl(s, alpha, true);
}

std::complex<double> zeta(std::complex<double> s) { return hurwitz_zeta(s, 1.0); }

std::complex<double> l_function(const DirichletCharacter& chi, std::complex<double> s) {
  const std::uint64_t q = chi.modulus();
  if (chi.principal() && s == cd{1.0, 0.0}) throw PoleError("principal L-function has a pole at s = 1");
  ComplexCompensatedSum acc;
  const double qd = static_cast<double>(q);
  for (std::uint64_t a = 1; a <= q; ++a) {
    const cd c = chi(a);
    if (c == cd{}) continue;
    const double alpha = static_cast<double>(a) / qd;
    acc.add(c * (chi.principal() ? hurwitz_zeta(s, alpha) : hurwitz_zeta_regular(s, alpha)));
  }
  return power_neg(qd, s) * acc.value();
}

std::complex<double> euler_product(const PrimeValueSpec& spec, std::complex<double> s, std::uint64_t P,
                                   const PrimeTable& table, std::vector<std::string>* warnings) {
  if (!(s.real() > 1.0)) throw InvalidArgument("euler_product needs Re s > 1");
  if (P > table.limit()) throw InvalidArgument("euler_product: P exceeds the prime table limit");
  const PrimeValues f(spec);
  cd product = 1.0;
  for (const std::uint32_t p : table.primes()) {
    if (p > P) break;
    cd factor;
    if (spec.mode == SpecMode::completely_multiplicative) {
      const cd fp = f.at_prime(p);
      if (warnings && std::abs(fp) > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "|f(" << p << ")| = " << std::abs(fp) << " exceeds 1";
        warnings->push_back(msg.str());
      }
      factor = 1.0 - fp * power_neg(p, s);
      if (factor == cd{}) throw NumericError("Euler factor vanishes at p = " + std::to_string(p));
      product /= factor;
    } else {
      // sum_k f(p^k) p^{-ks}, truncated once p^{-k sigma} < 1e-18
      const cd ps = power_neg(p, s);
      const unsigned K =
          static_cast<unsigned>(std::ceil(18.0 * std::log(10.0) / (s.real() * std::log(static_cast<double>(p)))));
      cd local = 1.0, pk = 1.0;
      for (unsigned k = 1; k <= K; ++k) {
        pk *= ps;
        local += f.at_prime_power(p, k) * pk;
      }
      product *= local;
    }
  }
  return product;
}

std::complex<double> dirichlet_series_partial(const Sequence& seq, std::complex<double> s, std::uint64_t N) {
  if (N > seq.n_max()) throw InvalidArgument("dirichlet_series_partial: N exceeds the sequence length");
  ComplexCompensatedSum acc;
  const auto v = seq.values();
  for (std::uint64_t n = 1; n <= N; ++n) {
    const cd c = v[n - 1];
    if (c == cd{}) continue;
    acc.add(c * power_neg(static_cast<double>(n), s));
  }
  return acc.value();
}

namespace {

std::optional<cd> closed_form(const std::optional<PrimeValueSpec>& spec, double sigma) {
  if (!spec || spec->shift != cd{}) return std::nullopt;
  const auto* b = std::get_if<spec::BuiltinKind>(&spec->kind);
  if (!b) return std::nullopt;
  switch (b->which) {
    case Builtin::liouville:
      if (spec->mode != SpecMode::completely_multiplicative) return std::nullopt;
      return zeta(2.0 * sigma) / zeta(sigma);
    case Builtin::mobius: return 1.0 / zeta(sigma);
    case Builtin::unit:
      if (spec->mode != SpecMode::completely_multiplicative) return std::nullopt;
      return zeta(sigma);
  }
  return std::nullopt;
}

}  // namespace

std::vector<AbelPoint> abel_limit_scan(const Sequence& seq, std::span<const double> sigmas, std::uint64_t N) {
  std::vector<AbelPoint> out;
  for (const double sigma : sigmas) {
    if (!(sigma > 1.0)) throw InvalidArgument("abel_limit_scan needs every sigma > 1");
    out.push_back({sigma, dirichlet_series_partial(seq, sigma, N), closed_form(seq.spec(), sigma)});
  }
  return out;
}

std::vector<AbelPoint> abel_limit_scan(const PrimeValueSpec& spec, std::span<const double> sigmas, std::uint64_t N,
                                       const PrimeTable& table) {
  for (const double sigma : sigmas)
    if (!(sigma > 1.0)) throw InvalidArgument("abel_limit_scan needs every sigma > 1");
  return abel_limit_scan(build_sequence(spec, N, table), sigmas, N);
}

}  // namespace cmo
