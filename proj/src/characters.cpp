#include "cmo/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "cmo/errors.hpp"

namespace cmo {
namespace {

constexpr std::uint64_t kMaxModulus = 1'000'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a modulo m for gcd(a, m) = 1, m >= 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t) % m;
}

struct PrimePower {
  std::uint64_t p;
  unsigned e;
  std::uint64_t pe;
};

std::vector<PrimePower> factor(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.e;
      pp.pe *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::uint64_t smallest_primitive_root(const PrimePower& pp) {
  const std::uint64_t phi = pp.pe / pp.p * (pp.p - 1);
  std::vector<std::uint64_t> divisors;
  for (const auto& f : factor(phi)) divisors.push_back(phi / f.p);
  for (std::uint64_t g = 2; g < pp.pe; ++g) {
    if (g % pp.p == 0) continue;
    bool ok = true;
    for (const auto d : divisors) {
      if (powmod(g, d, pp.pe) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // only reached for pe = 2, whose unit group is trivial
}

// x = a mod m, x = 1 mod (q / m).
std::uint64_t crt_lift(std::uint64_t a, std::uint64_t m, std::uint64_t q) {
  const std::uint64_t rest = q / m;
  if (rest == 1) return a % q;
  // x = 1 + rest * k with rest * k = a - 1 (mod m)
  const std::uint64_t k = mulmod((a + m - 1) % m, invmod(rest % m, m), m);
  return (1 + rest * k) % q;
}

// One CRT component (a prime power) with its discrete-log table. Each unit
// residue r mod component_modulus maps to exponents for the 1 or 2 cyclic
// factors carried by this component.
struct Component {
  std::uint64_t modulus;
  std::size_t first_factor;
  std::size_t factor_count;
  std::vector<std::uint64_t> log0;
  std::vector<std::uint64_t> log1;
};

struct GroupData {
  UnitGroup group;
  std::vector<Component> components;
};

GroupData build_group(std::uint64_t q) {
  if (q == 0 || q > kMaxModulus)
    throw InvalidArgument("character modulus must lie in [1, 1e6], got " + std::to_string(q));
  GroupData data;
  data.group.modulus = q;
  for (const auto& pp : factor(q)) {
    Component comp{pp.pe, data.group.factors.size(), 0, {}, {}};
    if (pp.p == 2) {
      if (pp.e == 1) continue;
      comp.log0.assign(pp.pe, 0);
      if (pp.e == 2) {
        data.group.factors.push_back({4, crt_lift(3, 4, q), 2});
        comp.factor_count = 1;
        comp.log0[3] = 1;
      } else {
        const std::uint64_t half_order = pp.pe / 4;
        data.group.factors.push_back({pp.pe, crt_lift(pp.pe - 1, pp.pe, q), 2});
        data.group.factors.push_back({pp.pe, crt_lift(5, pp.pe, q), half_order});
        comp.factor_count = 2;
        comp.log1.assign(pp.pe, 0);
        std::uint64_t v = 1;
        for (std::uint64_t k = 0; k < half_order; ++k) {
          comp.log0[v] = 0;
          comp.log1[v] = k;
          comp.log0[pp.pe - v] = 1;
          comp.log1[pp.pe - v] = k;
          v = v * 5 % pp.pe;
        }
      }
    } else {
      const std::uint64_t g = smallest_primitive_root(pp);
      const std::uint64_t order = pp.pe / pp.p * (pp.p - 1);
      data.group.factors.push_back({pp.pe, crt_lift(g, pp.pe, q), order});
      comp.factor_count = 1;
      comp.log0.assign(pp.pe, 0);
      std::uint64_t v = 1;
      for (std::uint64_t k = 0; k < order; ++k) {
        comp.log0[v] = k;
        v = v * g % pp.pe;
      }
    }
    data.components.push_back(std::move(comp));
  }
  return data;
}

// exp(2 pi i num / den), exact on the four quarter turns.
std::complex<double> root_of_unity(std::uint64_t num, std::uint64_t den) {
  num %= den;
  if ((4 * num) % den == 0) {
    switch (4 * num / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

DirichletCharacter build_character(const GroupData& data, std::uint64_t index) {
  const auto& factors = data.group.factors;
  const std::uint64_t q = data.group.modulus;
  if (index >= data.group.order())
    throw InvalidSpec("character index " + std::to_string(index) + " out of range for modulus " +
                      std::to_string(q));

  // Mixed-radix digits, last factor least significant.
  std::vector<std::uint64_t> k(factors.size());
  std::uint64_t rest = index;
  for (std::size_t j = factors.size(); j-- > 0;) {
    k[j] = rest % factors[j].order;
    rest /= factors[j].order;
  }
  std::uint64_t lcm = 1;
  for (const auto& f : factors) lcm = std::lcm(lcm, f.order);
  std::vector<std::uint64_t> scale(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) scale[j] = k[j] * (lcm / factors[j].order) % lcm;

  std::vector<std::complex<double>> values(q, {0.0, 0.0});
  for (std::uint64_t a = 0; a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    std::uint64_t phase = 0;
    for (const auto& comp : data.components) {
      const std::uint64_t r = a % comp.modulus;
      phase = (phase + mulmod(scale[comp.first_factor], comp.log0[r], lcm)) % lcm;
      if (comp.factor_count == 2)
        phase = (phase + mulmod(scale[comp.first_factor + 1], comp.log1[r], lcm)) % lcm;
    }
    values[a] = root_of_unity(phase, lcm);
  }
  if (q == 1) values[0] = {1.0, 0.0};
  DirichletCharacter chi(q, index, std::move(values), index == 0);
  return chi;
}

}  // namespace

std::uint64_t UnitGroup::order() const {
  std::uint64_t n = 1;
  for (const auto& f : factors) n *= f.order;
  return n;
}

UnitGroup unit_group(std::uint64_t q) { return build_group(q).group; }

DirichletCharacter::DirichletCharacter(std::uint64_t q, std::uint64_t index,
                                       std::vector<std::complex<double>> values, bool principal)
    : q_(q), index_(index), values_(std::move(values)), principal_(principal), real_(true) {
  if (q_ == 0 || values_.size() != q_) throw InvalidArgument("character table size must equal the modulus");
  for (const auto& v : values_)
    if (v.imag() != 0.0) real_ = false;
}

DirichletCharacter make_character(std::uint64_t q, std::uint64_t index) {
  return build_character(build_group(q), index);
}

std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q) {
  const GroupData data = build_group(q);
  std::vector<DirichletCharacter> out;
  const std::uint64_t n = data.group.order();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(build_character(data, i));
  return out;
}

std::complex<double> char_value(const DirichletCharacter& chi, std::uint64_t n) { return chi(n); }

bool is_principal(const DirichletCharacter& chi) { return chi.principal(); }

nlohmann::json to_json(const DirichletCharacter& chi) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : chi.values()) values.push_back({v.real(), v.imag()});
  return {{"q", chi.modulus()}, {"index", chi.index()}, {"values", values}};
}

DirichletCharacter character_from_json(const nlohmann::json& j) {
  const auto q = j.at("q").get<std::uint64_t>();
  const auto index = j.at("index").get<std::uint64_t>();
  std::vector<std::complex<double>> values;
  for (const auto& v : j.at("values")) values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
  return DirichletCharacter(q, index, std::move(values), index == 0);
}

}  // namespace cmo
