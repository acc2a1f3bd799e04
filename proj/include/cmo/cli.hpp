#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmo/prime_value_spec.hpp"

namespace cmo::cli {

// Parsed command line. Every field has a documented default; the canonical
// JSON form lists all of them, so a config round-trips exactly.
struct RunConfig {
  std::string command;                 // sieve, sum, criterion, zeros, verify-inversion, window-sum, abel-scan, euler-product
  std::string spec = "liouville";      // shorthand or spec file
  std::string weight = "1";            // "1" or "1/n"
  std::uint64_t n = 1'000'000;         // sequence length / sieve limit
  std::uint64_t pmax = 10'000'000;     // prime bound for criteria and Euler products
  std::string checkpoints = "decades"; // "decades" or a comma list
  std::string which;                   // criterion selector
  std::vector<double> taus;            // extra tau values for thm7
  double tau = 0.0;                    // inversion twist
  double margin = 0.05;                // thm9 margin
  double quad_tol = 1e-9;              // thm9p quadrature
  std::vector<double> sigmas{2.0, 1.5, 1.2, 1.1, 1.05};
  std::string s = "2";                 // "re" or "re,im"
  std::uint64_t q = 4;
  std::uint64_t index = 1;
  double t_min = 0.0;
  double t_max = 10.0;
  double zero_tol = 1e-4;
  std::string model = "liouville";     // window-sum boundary model
  double x = 9.210340371976184;        // log 10^4
  double a = 0.05;
  std::optional<double> T;             // window-sum cutoff; default: smallest T meeting tol
  double window_tol = 1e-4;
  std::string format;                  // csv or json; per-command default when empty
  std::string out;                     // output path; stdout when empty
  std::string cache_dir;               // sequence cache; falls back to CMO_CACHE_DIR

  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
};

// Usage problems: unknown flags, bad values, unknown specs.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shorthands: liouville, mobius, unit, const:RE[,IM], char:Q:I, zero:Q:I:first
// (or :K for the K-th zero above t = 0), random:SEED; any of these may end in
// "/n" to divide by n. Otherwise a path to a .json spec or a key = value file.
PrimeValueSpec parse_spec(const std::string& text);

// key = value lines ('#' comments) mirroring the spec JSON. Complex values are
// "re,im"; tables and deltas are "p:re,im; p:re,im"; base is a shorthand.
PrimeValueSpec parse_spec_kv(const std::string& text);

// Throws UsageError on malformed arguments. --help throws nothing and
// returns a config with an empty command.
RunConfig parse_args(std::span<const std::string> args);

// Exit codes: 0 success, 1 usage error, 2 numeric failure.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cmo::cli
