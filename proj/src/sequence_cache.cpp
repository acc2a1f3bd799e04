#include "cmo/sequence_cache.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>

#include "cmo/errors.hpp"

namespace cmo {
namespace {

constexpr char kMagic[4] = {'C', 'M', 'O', '1'};

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(const std::vector<std::uint8_t>& in, std::size_t pos) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
  return v;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::vector<std::uint8_t> encode_sequence(const Sequence& seq) {
  if (!seq.spec()) throw InvalidArgument("only spec-backed sequences can be serialized");
  const std::string json = canonical_json(*seq.spec());
  std::vector<std::uint8_t> out;
  out.reserve(20 + json.size() + 16 * seq.n_max());
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_u64(out, seq.n_max());
  put_u64(out, json.size());
  out.insert(out.end(), json.begin(), json.end());
  for (const cplx& z : seq.values()) {
    put_u64(out, std::bit_cast<std::uint64_t>(z.real()));
    put_u64(out, std::bit_cast<std::uint64_t>(z.imag()));
  }
  return out;
}

Sequence decode_sequence(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 20 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw InvalidArgument("not a CMO1 sequence file");
  const std::uint64_t n_max = get_u64(bytes, 4);
  const std::uint64_t json_len = get_u64(bytes, 12);
  if (json_len > bytes.size() - 20) throw InvalidArgument("truncated sequence header");
  const std::size_t data_start = 20 + json_len;
  if ((bytes.size() - data_start) / 16 != n_max || (bytes.size() - data_start) % 16 != 0)
    throw InvalidArgument("sequence payload size does not match n_max");
  const std::string json(bytes.begin() + 20, bytes.begin() + static_cast<std::ptrdiff_t>(data_start));
  PrimeValueSpec spec = spec_from_json(nlohmann::json::parse(json));
  std::vector<cplx> values(n_max);
  for (std::uint64_t i = 0; i < n_max; ++i) {
    const std::size_t pos = data_start + 16 * i;
    values[i] = {std::bit_cast<double>(get_u64(bytes, pos)), std::bit_cast<double>(get_u64(bytes, pos + 8))};
  }
  const auto kind = spec.mode == SpecMode::completely_multiplicative ? Multiplicativity::complete
                                                                     : Multiplicativity::multiplicative;
  return Sequence(std::move(values), kind, std::move(spec));
}

void write_sequence(const std::filesystem::path& path, const Sequence& seq) {
  const auto bytes = encode_sequence(seq);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write " + tmp);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw InvalidArgument("short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Sequence read_sequence(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_sequence(bytes);
}

SequenceCache::SequenceCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path SequenceCache::path_for(const PrimeValueSpec& spec, std::uint64_t n_max) const {
  char name[64];
  std::snprintf(name, sizeof name, "seq-%016llx-%llu.cmo",
                static_cast<unsigned long long>(fnv1a(canonical_json(spec))),
                static_cast<unsigned long long>(n_max));
  return dir_ / name;
}

std::optional<Sequence> SequenceCache::load(const PrimeValueSpec& spec, std::uint64_t n_max) const {
  const auto path = path_for(spec, n_max);
  if (!std::filesystem::exists(path)) return std::nullopt;
  Sequence seq = read_sequence(path);
  // Hash collisions are caught by comparing the embedded spec.
  if (seq.n_max() != n_max || !seq.spec() || !(*seq.spec() == spec)) return std::nullopt;
  return seq;
}

void SequenceCache::store(const Sequence& seq) const { write_sequence(path_for(*seq.spec(), seq.n_max()), seq); }

}  // namespace cmo
