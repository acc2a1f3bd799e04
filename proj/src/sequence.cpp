#include "cmo/sequence.hpp"

#include <cmath>
#include <string>

#include "cmo/compensated_sum.hpp"
#include "cmo/errors.hpp"

namespace cmo {
namespace {

const PrimeTable& ensure_table(std::uint64_t n_max, const PrimeTable& table) {
  if (n_max > table.limit() && n_max >= 2)
    throw InvalidArgument("prime table limit " + std::to_string(table.limit()) + " below n_max " +
                          std::to_string(n_max));
  return table;
}

}  // namespace

Sequence::Sequence(std::vector<cplx> values, Multiplicativity kind, std::optional<PrimeValueSpec> spec)
    : values_(std::move(values)), kind_(kind), spec_(std::move(spec)) {}

cplx Sequence::at(std::uint64_t n) const {
  if (n == 0 || n > n_max())
    throw InvalidArgument("index " + std::to_string(n) + " outside 1.." + std::to_string(n_max()));
  return values_[n - 1];
}

Sequence delta_one(std::uint64_t n_max) {
  std::vector<cplx> v(n_max);
  if (n_max) v[0] = 1.0;
  return Sequence(std::move(v), Multiplicativity::multiplicative);
}

Sequence constant_one(std::uint64_t n_max) {
  return Sequence(std::vector<cplx>(n_max, cplx{1.0, 0.0}), Multiplicativity::complete,
                  PrimeValueSpec::unit());
}

Sequence build_cm_sequence(const PrimeValueSpec& spec, std::uint64_t n_max) {
  if (n_max < 2) return build_cm_sequence(spec, n_max, PrimeTable(2));
  return build_cm_sequence(spec, n_max, PrimeTable(n_max));
}

Sequence build_cm_sequence(const PrimeValueSpec& spec, std::uint64_t n_max, const PrimeTable& table) {
  if (spec.mode != SpecMode::completely_multiplicative)
    throw InvalidSpec("build_cm_sequence needs a completely multiplicative spec");
  const PrimeValues f(spec);
  ensure_table(n_max, table);
  std::vector<cplx> v(n_max);
  if (n_max == 0) return Sequence(std::move(v), Multiplicativity::complete, spec);
  v[0] = 1.0;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t p = table.spf(n);
    v[n - 1] = (p == n) ? f.at_prime(p) : v[n / p - 1] * v[p - 1];
  }
  return Sequence(std::move(v), Multiplicativity::complete, spec);
}

Sequence build_mult_sequence(const PrimeValueSpec& spec, std::uint64_t n_max) {
  if (n_max < 2) return build_mult_sequence(spec, n_max, PrimeTable(2));
  return build_mult_sequence(spec, n_max, PrimeTable(n_max));
}

Sequence build_mult_sequence(const PrimeValueSpec& spec, std::uint64_t n_max, const PrimeTable& table) {
  if (spec.mode != SpecMode::prime_powers) throw InvalidSpec("build_mult_sequence needs a prime-power spec");
  const PrimeValues f(spec);
  ensure_table(n_max, table);
  std::vector<cplx> v(n_max);
  if (n_max == 0) return Sequence(std::move(v), Multiplicativity::multiplicative, spec);
  v[0] = 1.0;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t p = table.spf(n);
    std::uint64_t m = n;
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    v[n - 1] = (m == 1) ? f.at_prime_power(p, k) : v[m - 1] * v[n / m - 1];
  }
  return Sequence(std::move(v), Multiplicativity::multiplicative, spec);
}

Sequence build_sequence(const PrimeValueSpec& spec, std::uint64_t n_max, const PrimeTable& table) {
  return spec.mode == SpecMode::completely_multiplicative ? build_cm_sequence(spec, n_max, table)
                                                          : build_mult_sequence(spec, n_max, table);
}

Sequence dirichlet_convolve(const Sequence& a, const Sequence& b, std::uint64_t N) {
  if (a.n_max() < N || b.n_max() < N)
    throw InvalidArgument("convolution inputs shorter than N = " + std::to_string(N));
  std::vector<cplx> out(N);
  const auto av = a.values();
  const auto bv = b.values();
  for (std::uint64_t d = 1; d <= N; ++d) {
    const cplx ad = av[d - 1];
    if (ad == cplx{}) continue;
    for (std::uint64_t m = 1, n = d; n <= N; ++m, n += d) out[n - 1] += ad * bv[m - 1];
  }
  Multiplicativity kind = Multiplicativity::none;
  if (a.kind() != Multiplicativity::none && b.kind() != Multiplicativity::none)
    kind = Multiplicativity::multiplicative;
  return Sequence(std::move(out), kind);
}

SumReport partial_sums(const Sequence& seq, Weight weight, std::span<const std::uint64_t> checkpoints) {
  SumReport report;
  report.weight = weight;
  report.compensated = true;
  report.checkpoints.assign(checkpoints.begin(), checkpoints.end());
  report.sums.reserve(checkpoints.size());
  ComplexCompensatedSum acc;
  std::uint64_t n = 0;
  std::uint64_t previous = 0;
  const auto values = seq.values();
  for (const std::uint64_t x : checkpoints) {
    if (x > seq.n_max())
      throw InvalidArgument("checkpoint " + std::to_string(x) + " beyond n_max " + std::to_string(seq.n_max()));
    if (x < previous) throw InvalidArgument("checkpoints must be ascending");
    previous = x;
    for (; n < x; ++n) {
      const cplx v = values[n];
      acc.add(weight == Weight::one ? v : v / static_cast<double>(n + 1));
    }
    report.sums.push_back(acc.value());
  }
  return report;
}

std::vector<std::int8_t> mobius_values(std::uint64_t x, const PrimeTable& table) {
  ensure_table(x, table);
  std::vector<std::int8_t> mu(x + 1, 0);
  if (x >= 1) mu[1] = 1;
  for (std::uint64_t n = 2; n <= x; ++n) {
    const std::uint64_t p = table.spf(n);
    const std::uint64_t m = n / p;
    mu[n] = (m % p == 0) ? 0 : static_cast<std::int8_t>(-mu[m]);
  }
  return mu;
}

cplx twisted_mobius_sum(double x, double tau, const PrimeTable& table) {
  if (!(x >= 1.0)) throw InvalidArgument("twisted_mobius_sum needs x >= 1");
  const auto X = static_cast<std::uint64_t>(std::floor(x));
  const auto mu = mobius_values(X, table);
  ComplexCompensatedSum acc;
  for (std::uint64_t n = 1; n <= X; ++n) {
    if (mu[n] == 0) continue;
    const double logn = std::log(static_cast<double>(n));
    const double mag = mu[n] / static_cast<double>(n);
    acc.add({mag * std::cos(tau * logn), -mag * std::sin(tau * logn)});
  }
  return acc.value();
}

std::vector<std::uint64_t> decade_checkpoints(std::uint64_t limit, unsigned first_exponent) {
  std::vector<std::uint64_t> out;
  std::uint64_t x = 1;
  for (unsigned i = 0; i < first_exponent; ++i) x *= 10;
  for (; x <= limit; x *= 10) out.push_back(x);
  return out;
}

}  // namespace cmo
