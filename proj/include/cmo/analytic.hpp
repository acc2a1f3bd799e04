#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmo/characters.hpp"
#include "cmo/prime_table.hpp"
#include "cmo/prime_value_spec.hpp"
#include "cmo/sequence.hpp"

namespace cmo {

// Validity window of the zeta evaluators: sigma >= -1, |t| <= 1000.
inline constexpr double kZetaMinSigma = -1.0;
inline constexpr double kZetaMaxAbsT = 1000.0;

// Euler-Maclaurin parameters: direct terms n < N with N = max(25, ceil(|t|)),
// then Bernoulli corrections through B_20. Absolute error is below 1e-12
// inside the validity window.
inline constexpr unsigned kEulerMaclaurinMinShift = 25;
inline constexpr unsigned kEulerMaclaurinBernoulliTerms = 10;
unsigned euler_maclaurin_shift(std::complex<double> s);

// zeta(s, alpha) = sum_{n>=0} (n + alpha)^{-s}, alpha in (0, 1].
// Throws PoleError at s = 1 and InvalidArgument outside the validity window.
std::complex<double> hurwitz_zeta(std::complex<double> s, double alpha);

// zeta(s, alpha) - 1/(s - 1), analytic at s = 1 (where it equals -digamma(alpha)).
std::complex<double> hurwitz_zeta_regular(std::complex<double> s, double alpha);

std::complex<double> zeta(std::complex<double> s);

// L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q). For non-principal chi
// the pole parts cancel and s = 1 is allowed.
std::complex<double> l_function(const DirichletCharacter& chi, std::complex<double> s);

// prod_{p <= P} E_p(s)^{-1} with E_p = 1 - f(p) p^{-s} in completely
// multiplicative mode; in prime-power mode the factor is sum_k f(p^k) p^{-ks}.
// Requires Re s > 1 and P <= table.limit(). Primes with |f(p)| > 1 append a
// message to `warnings` when given. Throws NumericError on a vanishing factor.
std::complex<double> euler_product(const PrimeValueSpec& spec, std::complex<double> s, std::uint64_t P,
                                   const PrimeTable& table, std::vector<std::string>* warnings = nullptr);

// sum_{n <= N} seq[n] n^{-s}, compensated.
std::complex<double> dirichlet_series_partial(const Sequence& seq, std::complex<double> s, std::uint64_t N);

struct AbelPoint {
  double sigma;
  std::complex<double> series;
  // zeta(2 sigma)/zeta(sigma) for liouville, 1/zeta(sigma) for mobius,
  // zeta(sigma) for unit (unshifted builtins only).
  std::optional<std::complex<double>> closed_form;
};

// F(sigma) by truncated Dirichlet series for each sigma > 1.
std::vector<AbelPoint> abel_limit_scan(const PrimeValueSpec& spec, std::span<const double> sigmas, std::uint64_t N,
                                       const PrimeTable& table);
std::vector<AbelPoint> abel_limit_scan(const Sequence& seq, std::span<const double> sigmas, std::uint64_t N);

}  // namespace cmo
