#include "cmo/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmo/errors.hpp"

namespace cmo {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2 || limit > kMaxLimit)
    throw InvalidArgument("sieve limit must lie in [2, 1e8], got " + std::to_string(limit));
  spf_.assign(limit + 1, 0);
  // pi(x) < 1.26 x / log x
  primes_.reserve(static_cast<std::size_t>(1.26 * limit / std::max(1.0, std::log(double(limit)))) + 16);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t lp = spf_[i];
    for (const std::uint32_t p : primes_) {
      if (p > lp || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

std::uint64_t PrimeTable::prime_count(std::uint64_t x) const {
  return static_cast<std::uint64_t>(
      std::upper_bound(primes_.begin(), primes_.end(), std::min(x, limit_)) - primes_.begin());
}

std::uint64_t PrimeTable::memory_bytes() const noexcept {
  return spf_.capacity() * sizeof(std::uint32_t) + primes_.capacity() * sizeof(std::uint32_t);
}

PrimeTable sieve_primes(std::uint64_t n) { return PrimeTable(n); }

}  // namespace cmo
