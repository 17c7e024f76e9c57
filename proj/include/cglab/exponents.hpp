#pragma once

#include <optional>
#include <string>

#include "cglab/counting.hpp"
#include "cglab/errors.hpp"
#include "cglab/oracle.hpp"
#include "cglab/presentation.hpp"

namespace cglab {

/// Exact finite-length lower bound for an exponent plus metadata.
/// For eta the definitional floor 1/2 applies; `raw` keeps the unfloored
/// value and `empty_kernel` marks the free-group convention case.
struct ExponentBound {
  double value = 0.5;
  double raw = 0.0;
  bool empty_kernel = false;
  int best_length = 0;  // length achieving the max
};

/// theta lower bound: max over usable lengths of (1/l) log_{2m} |W_l|.
/// Usable lengths are even unless the table shows an odd-length relation
/// (some odd count > 0), in which case both parities enter.
/// Throws UndefinedEstimateError if no length l >= 1 has a positive count.
ExponentBound theta_lower_bound(const CountTable& plain);

/// eta lower bound: max over usable lengths of (log_{2m-1}|W'_l| - 2)/l,
/// floored at the definitional 1/2; empty_kernel set (value exactly 1/2)
/// when every count at l >= 1 vanishes.
ExponentBound eta_lower_bound(const CountTable& reduced);

/// Grigorchuk formula: (2m)^theta = (2m-1)^eta + (2m-1)^{1-eta}.
/// Strictly increasing in eta on [1/2, 1]; domain error outside.
double grigorchuk_theta_from_eta(double eta, int m);

/// Inverse branch with eta >= 1/2. Domain: log_{2m}(2 sqrt(2m-1)) <= theta
/// <= 1; below the free-group value throws NoSolutionError, above 1 a
/// domain error.
double grigorchuk_eta_from_theta(double theta, int m);

/// Free-group gross cogrowth exponent log_{2m}(2 sqrt(2m-1)).
double free_group_theta(int m);

enum class ExponentKind { eta, theta };

struct ExponentEstimate {
  ExponentKind kind = ExponentKind::eta;
  int base = 0;
  double lower_bound = 0.5;
  double raw_lower = 0.0;
  bool empty_kernel = false;
  /// two-point slope of the log-count over the two largest usable lengths;
  /// equals lower_bound when fewer than two positive counts exist.
  double point_estimate = 0.5;
  int window_lo = 0, window_hi = 0;
  std::optional<double> certified_upper;  // from the locality module
};

struct EstimatePair {
  ExponentEstimate eta, theta;
  int ball_radius = 0;
  std::size_t ball_size = 0;
  std::uint64_t plain_fingerprint = 0, reduced_fingerprint = 0;
};

ExponentEstimate estimate_from_table(const CountTable& table);

/// Full pipeline: largest affordable ball (budget truncates), both count
/// tables, bounds and point estimates; when an isoperimetric constant C is
/// supplied, attaches the locality certificate for the reduced table with
/// window scale A chosen as large as the exact counts allow.
EstimatePair estimate_exponents(const Presentation& p, const TrivialityOracle& oracle,
                                int max_radius, std::size_t budget = 2'000'000,
                                std::optional<double> iso_constant = std::nullopt);

}  // namespace cglab
