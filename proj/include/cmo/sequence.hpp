#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cmo/prime_table.hpp"
#include "cmo/prime_value_spec.hpp"

namespace cmo {

enum class Multiplicativity { complete, multiplicative, none };

// Immutable arithmetic function on 1..n_max.
class Sequence {
 public:
  // `values` holds f(1..n_max); values.size() == n_max.
  Sequence(std::vector<cplx> values, Multiplicativity kind, std::optional<PrimeValueSpec> spec = std::nullopt);

  std::uint64_t n_max() const noexcept { return values_.size(); }
  cplx operator[](std::uint64_t n) const { return values_[n - 1]; }
  cplx at(std::uint64_t n) const;
  std::span<const cplx> values() const noexcept { return values_; }
  Multiplicativity kind() const noexcept { return kind_; }
  const std::optional<PrimeValueSpec>& spec() const noexcept { return spec_; }

 private:
  std::vector<cplx> values_;
  Multiplicativity kind_;
  std::optional<PrimeValueSpec> spec_;
};

// delta_1: 1 at n = 1, 0 elsewhere.
Sequence delta_one(std::uint64_t n_max);
// The constant function 1.
Sequence constant_one(std::uint64_t n_max);

// values[n] = prod f(p)^{v_p(n)} via the SPF table. Requires a completely
// multiplicative spec; throws InvalidSpec otherwise.
Sequence build_cm_sequence(const PrimeValueSpec& spec, std::uint64_t n_max);
Sequence build_cm_sequence(const PrimeValueSpec& spec, std::uint64_t n_max, const PrimeTable& table);

// Multiplicative extension from prime powers. Requires prime-power mode.
Sequence build_mult_sequence(const PrimeValueSpec& spec, std::uint64_t n_max);
Sequence build_mult_sequence(const PrimeValueSpec& spec, std::uint64_t n_max, const PrimeTable& table);

// Dispatches on spec.mode.
Sequence build_sequence(const PrimeValueSpec& spec, std::uint64_t n_max, const PrimeTable& table);

// (a*b)(n) = sum_{d | n} a(d) b(n/d) for n <= N, by the multiples loop.
// Throws InvalidArgument when either input is shorter than N.
Sequence dirichlet_convolve(const Sequence& a, const Sequence& b, std::uint64_t N);

enum class Weight { one, inverse_n };

struct SumReport {
  std::vector<std::uint64_t> checkpoints;
  std::vector<cplx> sums;
  Weight weight = Weight::one;
  bool compensated = true;
};

// Checkpointed compensated partial sums sum_{n<=x} w(n) f(n), accumulated
// left to right. Checkpoints must be ascending and <= n_max.
SumReport partial_sums(const Sequence& seq, Weight weight, std::span<const std::uint64_t> checkpoints);

// mu(n) for 1..x from an SPF table; mu[0] is unused.
std::vector<std::int8_t> mobius_values(std::uint64_t x, const PrimeTable& table);

// sum_{n<=x} mu(n) / n^{1 + i tau}. Requires 1 <= x <= table.limit().
cplx twisted_mobius_sum(double x, double tau, const PrimeTable& table);

// 10^first, 10^(first+1), ... up to limit.
std::vector<std::uint64_t> decade_checkpoints(std::uint64_t limit, unsigned first_exponent = 2);

}  // namespace cmo
