#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmo/characters.hpp"
#include "cmo/prime_value_spec.hpp"

namespace cmo {

// Search limits: the L-function evaluator is only trusted here.
inline constexpr double kZeroSearchMaxAbsT = 50.0;
inline constexpr std::uint64_t kZeroSearchMaxModulus = 100;
// Strip actually searched by locate_zeros.
inline constexpr double kZeroSearchSigmaMin = 0.01;
inline constexpr double kZeroSearchSigmaMax = 0.99;

struct SearchRectangle {
  double sigma_min;
  double sigma_max;
  double t_min;
  double t_max;

  double width() const noexcept { return sigma_max - sigma_min; }
  double height() const noexcept { return t_max - t_min; }
  double diameter() const noexcept;
};

// Throws InvalidArgument unless 0 < sigma_min < sigma_max < 1 and t_min < t_max.
void validate(const SearchRectangle& rect);

struct ZeroRecord {
  std::uint64_t q;
  std::uint64_t index;
  std::complex<double> rho;
  double residual;  // |L(rho, chi)|
  int certified_count;
};

struct WindingOptions {
  // Each accepted boundary step is split into 2^extra_halvings substeps.
  unsigned extra_halvings = 0;
  // Smallest step, relative to the edge length, before giving up.
  double min_relative_step = 1e-9;
};

// Winding number of L(., chi) along the boundary of rect, counterclockwise.
// A step is accepted when the argument moves by less than pi/2 and the
// midpoint agrees; otherwise the step is halved. Throws InvalidArgument for a
// principal chi or a rectangle outside the strip, BoundaryZeroError when the
// walk cannot resolve the boundary, NumericError for a non-integral total.
int count_zeros_rectangle(const DirichletCharacter& chi, const SearchRectangle& rect, const WindingOptions& options = {});

struct ZeroSearchFailure {
  SearchRectangle rect;
  std::string reason;
};

struct ZeroSearchResult {
  std::vector<ZeroRecord> zeros;  // sorted by (Im rho, Re rho)
  std::vector<ZeroSearchFailure> failures;
};

// Zeros of L(s, chi) with kZeroSearchSigmaMin < Re s < kZeroSearchSigmaMax and
// t_min <= Im s <= t_max. Rectangles are bisected until each holds one zero
// and has diameter below 10 tol, then Newton (central-difference derivative,
// step 1e-6) refines to |L| < 1e-8. Requires q <= 100 and |t| <= 50.
ZeroSearchResult locate_zeros(const DirichletCharacter& chi, double t_min, double t_max, double tol = 1e-4);

// The twisted-character spec f(p) = chi(p) p^{-rho}, whose sequence is chi(n) / n^rho.
PrimeValueSpec cmo_from_zero(const DirichletCharacter& chi, std::complex<double> rho);

// [{q, index, re, im, residual}, ...]
nlohmann::json zeros_to_json(std::span<const ZeroRecord> zeros);

}  // namespace cmo
