#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cmo {

// Smallest-prime-factor table for 2..limit built by the linear sieve.
//
// Memory is 4 bytes per integer for the SPF array plus 4 bytes per prime,
// i.e. about 420 MB at the supported maximum limit of 1e8.
class PrimeTable {
 public:
  static constexpr std::uint64_t kMaxLimit = 100'000'000;

  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  // spf(n) for 2 <= n <= limit.
  std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }
  bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  // Number of primes <= x (x clamped to the limit).
  std::uint64_t prime_count(std::uint64_t x) const;
  // Approximate heap footprint in bytes.
  std::uint64_t memory_bytes() const noexcept;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// Throws InvalidArgument when n < 2 or n > PrimeTable::kMaxLimit.
PrimeTable sieve_primes(std::uint64_t n);

}  // namespace cmo
