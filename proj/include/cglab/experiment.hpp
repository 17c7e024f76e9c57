#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cglab/presentation.hpp"

namespace cglab {

inline constexpr const char* kArtifactVersion = "cglab 0.1.0";

/// Parameters for a reproducible sweep. Every run is fully determined by
/// (config, seed): each (density, length, seed-index) cell draws its own RNG
/// substream keyed by the cell values, so removing one seed or cell leaves
/// all others byte-identical.
struct ExperimentConfig {
  int generator_count = 2;
  std::vector<double> densities{0.1};
  std::vector<int> lengths{12};
  WordKind kind = WordKind::reduced;
  int seeds_per_cell = 1;
  int radius = 0;       // 0 = skip exponent estimation in scans
  long long trials = 0; // monte carlo trials where applicable
  std::optional<double> iso_constant;  // enables locality certificates
  std::uint64_t seed = 0;
  long long relator_budget = 2'000'000;
  std::size_t ball_budget = 2'000'000;
  int threads = 1;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
};

/// Self-contained result: re-running the embedded config reproduces outputs.
/// wall_ms is informational and excluded from determinism comparisons.
struct ResultRecord {
  nlohmann::json config;
  std::uint64_t seed = 0;
  nlohmann::json outputs;
  double wall_ms = 0.0;
  std::string artifact_version = kArtifactVersion;

  nlohmann::json to_json(bool include_wall_clock = true) const;
};

/// Per (d, l, seed): piece statistics and small-cancellation flags at
/// C'(2d+0.05), C'(2d+0.1) and C'(1/6); where C'(1/6) holds and radius > 0,
/// Dehn-backed exponent estimates. Aggregates carry Wilson 95% intervals.
ResultRecord run_density_scan(const ExperimentConfig& cfg);

/// Per seed: full count tables and exponent estimates behind the d < 1/12
/// Dehn-soundness gate; refusals (C'(1/6) failures) are recorded per seed,
/// never silently estimated. Aggregates include the per-length median of the
/// eta point estimates.
ResultRecord run_cogrowth_curve(const ExperimentConfig& cfg);

/// CSV exports with stable column order.
std::string density_scan_csv(const ResultRecord& record);  // d,ell,sc16_rate,mean_piece_ratio,n_seeds
std::string curve_csv(const ResultRecord& record);  // seed,d,ell,eta_lower,eta_point,theta_lower,theta_point,cert_upper

}  // namespace cglab
