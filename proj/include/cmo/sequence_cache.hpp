#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cmo/sequence.hpp"

namespace cmo {

// Binary layout, all integers and floats little-endian:
//   "CMO1" | n_max: u64 | json_len: u64 | canonical spec JSON (json_len bytes)
//   | (re: f64, im: f64) for n = 1..n_max
// Only sequences carrying a spec can be cached.
std::vector<std::uint8_t> encode_sequence(const Sequence& seq);
// Throws InvalidArgument on a malformed or truncated buffer.
Sequence decode_sequence(const std::vector<std::uint8_t>& bytes);

void write_sequence(const std::filesystem::path& path, const Sequence& seq);
Sequence read_sequence(const std::filesystem::path& path);

// Sequences keyed by (canonical spec, n_max) under a cache directory.
class SequenceCache {
 public:
  explicit SequenceCache(std::filesystem::path dir);

  std::filesystem::path path_for(const PrimeValueSpec& spec, std::uint64_t n_max) const;
  std::optional<Sequence> load(const PrimeValueSpec& spec, std::uint64_t n_max) const;
  void store(const Sequence& seq) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace cmo
