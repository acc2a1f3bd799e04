#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <json.hpp>

namespace cmo {

// One cyclic factor of (Z/qZ)^*: the CRT component modulus m, the generator
// lifted to a residue mod q (congruent to 1 on the other components) and its
// order. Powers of two contribute the factors {-1} and {5} as usual.
struct CyclicFactor {
  std::uint64_t component_modulus;
  std::uint64_t generator;
  std::uint64_t order;
};

// Canonical decomposition of (Z/qZ)^*. Factors are listed with the 2-part
// first ({-1} then {5} for 8 | q), then odd prime powers in increasing order;
// the generator of an odd prime power is its smallest primitive root.
struct UnitGroup {
  std::uint64_t modulus = 1;
  std::vector<CyclicFactor> factors;

  std::uint64_t order() const;  // phi(q)
};

UnitGroup unit_group(std::uint64_t q);

// A Dirichlet character stored as a dense table on residues 0..q-1.
//
// Characters are indexed by exponent tuples (k_1, ..., k_r), 0 <= k_j < order_j,
// in lexicographic order with the first factor most significant:
//   chi(g_j) = exp(2 pi i k_j / order_j).
// Index 0 is the principal character.
class DirichletCharacter {
 public:
  DirichletCharacter(std::uint64_t q, std::uint64_t index, std::vector<std::complex<double>> values,
                     bool principal);

  std::uint64_t modulus() const noexcept { return q_; }
  std::uint64_t index() const noexcept { return index_; }
  bool principal() const noexcept { return principal_; }
  // Whether every value is real (chi^2 principal).
  bool real() const noexcept { return real_; }
  const std::vector<std::complex<double>>& values() const noexcept { return values_; }

  std::complex<double> operator()(std::uint64_t n) const { return values_[n % q_]; }

 private:
  std::uint64_t q_;
  std::uint64_t index_;
  std::vector<std::complex<double>> values_;
  bool principal_;
  bool real_;
};

// Throws InvalidArgument for q == 0 or q > 1e6, InvalidSpec for index >= phi(q).
DirichletCharacter make_character(std::uint64_t q, std::uint64_t index);

// All phi(q) characters in canonical order.
std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q);

std::complex<double> char_value(const DirichletCharacter& chi, std::uint64_t n);
bool is_principal(const DirichletCharacter& chi);

nlohmann::json to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const nlohmann::json& j);

}  // namespace cmo
