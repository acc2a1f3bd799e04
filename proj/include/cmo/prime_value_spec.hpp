#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>

#include <json.hpp>

#include "cmo/characters.hpp"

namespace cmo {

using cplx = std::complex<double>;

enum class SpecMode { completely_multiplicative, prime_powers };

enum class Builtin { liouville, mobius, unit };

struct PrimeValueSpec;

namespace spec {
struct BuiltinKind {
  Builtin which;
};
struct Constant {
  cplx c;
};
struct Character {
  std::uint64_t q;
  std::uint64_t index;
};
// chi(p) * p^{-rho}; the sequence is chi(n) / n^rho.
struct TwistedCharacter {
  std::uint64_t q;
  std::uint64_t index;
  cplx rho;
};
// f(p) = exp(2 pi i u_p), u_p derived from (seed, p) by SplitMix64 hashing.
struct RandomUnitCircle {
  std::uint64_t seed;
};
// Explicit values keyed by prime (or by prime power in prime-power mode);
// primes without an entry take `fallback`.
struct Table {
  std::map<std::uint64_t, cplx> entries;
  cplx fallback{0.0, 0.0};
};
// f(p) = base(p) + delta(p); delta has finite support on primes.
struct Perturbed {
  std::shared_ptr<const PrimeValueSpec> base;
  std::map<std::uint64_t, cplx> delta;
};
}  // namespace spec

// Rule assigning values at primes (and, in prime-power mode, at prime powers).
//
// Every kind may carry a `shift` s0: the value at p^k is multiplied by
// p^{-k s0}, so "liouville with shift 1" describes lambda(n)/n.
//
// Prime-power mode: mobius has f(p) = -1, f(p^k) = 0 for k >= 2. A table may
// list prime powers explicitly and a perturbation defers to its base for
// k >= 2. Every other p^k (k >= 2) takes the prime value f(p), which is the
// tilde extension g~(p^k) = g(p).
struct PrimeValueSpec {
  using Kind = std::variant<spec::BuiltinKind, spec::Constant, spec::Character, spec::TwistedCharacter,
                            spec::RandomUnitCircle, spec::Table, spec::Perturbed>;

  Kind kind;
  SpecMode mode = SpecMode::completely_multiplicative;
  cplx shift{0.0, 0.0};

  static PrimeValueSpec liouville();
  static PrimeValueSpec mobius();  // prime-power mode
  static PrimeValueSpec unit();
  static PrimeValueSpec constant(cplx c);
  static PrimeValueSpec character(std::uint64_t q, std::uint64_t index);
  static PrimeValueSpec twisted_character(std::uint64_t q, std::uint64_t index, cplx rho);
  static PrimeValueSpec random_unit_circle(std::uint64_t seed);
  static PrimeValueSpec table(std::map<std::uint64_t, cplx> entries, cplx fallback = {0.0, 0.0});

  PrimeValueSpec with_shift(cplx s0) const;
  PrimeValueSpec with_mode(SpecMode m) const;
};

// Canonical JSON: sorted keys, complex numbers as [re, im].
nlohmann::json to_json(const PrimeValueSpec& spec);
PrimeValueSpec spec_from_json(const nlohmann::json& j);
std::string canonical_json(const PrimeValueSpec& spec);

bool operator==(const PrimeValueSpec& a, const PrimeValueSpec& b);

// SplitMix64 finalizer. The random-unit-circle stream for prime p is
// u_p = (mix(seed ^ mix(p)) >> 11) * 2^-53, independent of evaluation order.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Materialized spec: resolves characters once, then answers point queries.
class PrimeValues {
 public:
  // Throws InvalidSpec for unknown characters or malformed tables.
  explicit PrimeValues(const PrimeValueSpec& spec);

  const PrimeValueSpec& spec() const noexcept { return spec_; }
  SpecMode mode() const noexcept { return spec_.mode; }

  // f(p), including the shift factor p^{-s0}.
  cplx at_prime(std::uint64_t p) const;
  // f(p^k), k >= 1. In completely multiplicative mode this is f(p)^k.
  cplx at_prime_power(std::uint64_t p, unsigned k) const;

 private:
  cplx unshifted_prime(std::uint64_t p) const;
  cplx unshifted_power(std::uint64_t p, unsigned k) const;

  PrimeValueSpec spec_;
  std::shared_ptr<const DirichletCharacter> chi_;
  std::shared_ptr<const PrimeValues> base_;
};

}  // namespace cmo
