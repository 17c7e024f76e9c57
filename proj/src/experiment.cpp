#include "cglab/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <sstream>
#include <thread>

#include "cglab/dehn.hpp"
#include "cglab/exponents.hpp"
#include "cglab/locality.hpp"

namespace cglab {

using nlohmann::json;

namespace {

std::uint64_t fnv(std::initializer_list<std::uint64_t> xs) {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : xs)
    for (int b = 0; b < 8; b++) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  return h;
}

std::uint64_t bits_of(double d) {
  std::uint64_t u;
  std::memcpy(&u, &d, sizeof u);
  return u;
}

struct Wilson {
  double low, high;
};

Wilson wilson95(long long hits, long long n) {
  if (n == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  double p = static_cast<double>(hits) / n, nf = static_cast<double>(n);
  double z2 = z * z, denom = 1.0 + z2 / nf;
  double center = (p + z2 / (2 * nf)) / denom;
  double half = z * std::sqrt(p * (1 - p) / nf + z2 / (4 * nf * nf)) / denom;
  return {center - half, center + half};
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct Cell {
  double density;
  int length;
  int seed_index;
};

// deterministic parallel map: results land in preallocated slots
template <typename F>
std::vector<json> run_cells(const std::vector<Cell>& cells, int threads, F&& work) {
  std::vector<json> results(cells.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); i++) results[i] = work(cells[i]);
    return results;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> cursor{0};
  for (int t = 0; t < threads; t++)
    pool.emplace_back([&] {
      for (std::size_t i = cursor.fetch_add(1); i < cells.size(); i = cursor.fetch_add(1))
        results[i] = work(cells[i]);
    });
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace

json ExperimentConfig::to_json() const {
  json j{{"m", generator_count},
         {"densities", densities},
         {"lengths", lengths},
         {"kind", kind == WordKind::plain ? "plain" : "reduced"},
         {"seeds_per_cell", seeds_per_cell},
         {"radius", radius},
         {"trials", trials},
         {"seed", seed},
         {"relator_budget", relator_budget},
         {"ball_budget", ball_budget},
         {"threads", threads}};
  if (iso_constant) j["iso_constant"] = *iso_constant;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig cfg;
  cfg.generator_count = j.value("m", 2);
  if (j.contains("densities")) cfg.densities = j.at("densities").get<std::vector<double>>();
  if (j.contains("lengths")) cfg.lengths = j.at("lengths").get<std::vector<int>>();
  cfg.kind = j.value("kind", std::string("reduced")) == "plain" ? WordKind::plain : WordKind::reduced;
  cfg.seeds_per_cell = j.value("seeds_per_cell", 1);
  cfg.radius = j.value("radius", 0);
  cfg.trials = j.value("trials", 0LL);
  cfg.seed = j.value("seed", 0ULL);
  cfg.relator_budget = j.value("relator_budget", 2'000'000LL);
  cfg.ball_budget = j.value("ball_budget", std::size_t{2'000'000});
  cfg.threads = j.value("threads", 1);
  if (j.contains("iso_constant")) cfg.iso_constant = j.at("iso_constant").get<double>();
  return cfg;
}

json ResultRecord::to_json(bool include_wall_clock) const {
  json j{{"config", config},
         {"seed", seed},
         {"outputs", outputs},
         {"artifact_version", artifact_version}};
  if (include_wall_clock) j["wall_ms"] = wall_ms;
  return j;
}

ResultRecord run_density_scan(const ExperimentConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Rng root(cfg.seed);
  std::vector<Cell> cells;
  for (double d : cfg.densities)
    for (int l : cfg.lengths)
      for (int s = 0; s < cfg.seeds_per_cell; s++) cells.push_back(Cell{d, l, s});

  auto work = [&](const Cell& cell) -> json {
    Rng rng = root.substream(fnv({bits_of(cell.density), static_cast<std::uint64_t>(cell.length),
                                  static_cast<std::uint64_t>(cell.seed_index)}));
    json row{{"d", cell.density}, {"ell", cell.length}, {"seed_index", cell.seed_index}};
    try {
      DensityConfig dc{cfg.generator_count, cell.density, cell.length, cfg.kind};
      Presentation p = sample_density_presentation(dc, rng, cfg.relator_budget);
      row["relators"] = p.relators.size();
      if (p.relators.empty()) {
        row["max_piece"] = 0;
        row["piece_ratio"] = 0.0;
        row["sc16"] = true;
        row["sc_2d_05"] = true;
        row["sc_2d_10"] = true;
        return row;
      }
      PieceReport rep = max_piece(p);
      row["max_piece"] = rep.max_piece_length;
      row["piece_ratio"] = static_cast<double>(rep.max_piece_length) / cell.length;
      bool sc16 = check_small_cancellation(p, Ratio{1, 6}).satisfied;
      row["sc16"] = sc16;
      row["sc_2d_05"] = check_small_cancellation(p, std::min(1.0, 2 * cell.density + 0.05)).satisfied;
      row["sc_2d_10"] = check_small_cancellation(p, std::min(1.0, 2 * cell.density + 0.10)).satisfied;
      if (sc16 && cfg.radius > 0) {
        DehnOracle oracle(p);
        EstimatePair est = estimate_exponents(p, oracle, cfg.radius, cfg.ball_budget,
                                              cfg.iso_constant);
        row["eta_lower"] = est.eta.lower_bound;
        row["eta_point"] = est.eta.point_estimate;
        row["theta_lower"] = est.theta.lower_bound;
        row["theta_point"] = est.theta.point_estimate;
      }
    } catch (const std::exception& e) {
      row["error"] = e.what();
    }
    return row;
  };
  std::vector<json> rows = run_cells(cells, cfg.threads, work);

  // aggregate per (d, l)
  json aggregates = json::array();
  std::size_t i = 0;
  for (double d : cfg.densities)
    for (int l : cfg.lengths) {
      long long sc16_hits = 0, n = 0;
      double ratio_sum = 0.0;
      for (int s = 0; s < cfg.seeds_per_cell; s++, i++) {
        const json& row = rows[i];
        if (row.contains("error")) continue;
        n++;
        if (row.at("sc16").get<bool>()) sc16_hits++;
        ratio_sum += row.at("piece_ratio").get<double>();
      }
      Wilson ci = wilson95(sc16_hits, n);
      aggregates.push_back(json{{"d", d},
                                {"ell", l},
                                {"n_seeds", n},
                                {"sc16_rate", n ? static_cast<double>(sc16_hits) / n : 0.0},
                                {"sc16_ci", {ci.low, ci.high}},
                                {"mean_piece_ratio", n ? ratio_sum / n : 0.0}});
    }

  ResultRecord rec;
  rec.config = cfg.to_json();
  rec.config["experiment"] = "density-scan";
  rec.seed = cfg.seed;
  rec.outputs = json{{"cells", rows}, {"aggregates", aggregates}};
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

ResultRecord run_cogrowth_curve(const ExperimentConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Rng root(cfg.seed);
  std::vector<Cell> cells;
  for (double d : cfg.densities)
    for (int l : cfg.lengths)
      for (int s = 0; s < cfg.seeds_per_cell; s++) cells.push_back(Cell{d, l, s});

  auto work = [&](const Cell& cell) -> json {
    Rng rng = root.substream(fnv({bits_of(cell.density), static_cast<std::uint64_t>(cell.length),
                                  static_cast<std::uint64_t>(cell.seed_index)}));
    json row{{"d", cell.density}, {"ell", cell.length}, {"seed_index", cell.seed_index}};
    try {
      DensityConfig dc{cfg.generator_count, cell.density, cell.length, cfg.kind};
      Presentation p = sample_density_presentation(dc, rng, cfg.relator_budget);
      row["relators"] = p.relators.size();
      if (!p.relators.empty()) {
        PieceReport rep = max_piece(p);
        row["max_piece"] = rep.max_piece_length;
        row["piece_ratio"] = static_cast<double>(rep.max_piece_length) / cell.length;
      }
      // Dehn soundness gate: exponent estimates only below density 1/12
      if (!(cell.density < 1.0 / 12.0)) {
        row["gated"] = "density >= 1/12: piece statistics only (no sound oracle)";
        return row;
      }
      if (cfg.radius < 1) {
        row["error"] = "insufficient radius: need radius >= 1 for count tables";
        return row;
      }
      DehnOracle oracle(p);  // throws UnsupportedPresentationError unless C'(1/6)
      EstimatePair est = estimate_exponents(p, oracle, cfg.radius, cfg.ball_budget,
                                            cfg.iso_constant);
      row["eta_lower"] = est.eta.lower_bound;
      row["eta_point"] = est.eta.point_estimate;
      row["eta_empty_kernel"] = est.eta.empty_kernel;
      row["theta_lower"] = est.theta.lower_bound;
      row["theta_point"] = est.theta.point_estimate;
      row["ball_radius"] = est.ball_radius;
      row["ball_size"] = est.ball_size;
      if (est.eta.certified_upper) row["cert_upper"] = *est.eta.certified_upper;
    } catch (const std::exception& e) {
      row["error"] = e.what();
    }
    return row;
  };
  std::vector<json> rows = run_cells(cells, cfg.threads, work);

  json aggregates = json::array();
  std::size_t i = 0;
  for (double d : cfg.densities)
    for (int l : cfg.lengths) {
      std::vector<double> eta_points;
      long long refused = 0, errors = 0;
      for (int s = 0; s < cfg.seeds_per_cell; s++, i++) {
        const json& row = rows[i];
        if (row.contains("eta_point"))
          eta_points.push_back(row.at("eta_point").get<double>());
        else if (row.contains("error")) {
          errors++;
          if (std::string(row.at("error")).find("C'(1/6)") != std::string::npos) refused++;
        }
      }
      json agg{{"d", d},
               {"ell", l},
               {"n_estimates", eta_points.size()},
               {"n_errors", errors},
               {"n_refused_c16", refused}};
      if (!eta_points.empty()) agg["median_eta_point"] = median(eta_points);
      aggregates.push_back(agg);
    }

  ResultRecord rec;
  rec.config = cfg.to_json();
  rec.config["experiment"] = "curve";
  rec.seed = cfg.seed;
  rec.outputs = json{{"cells", rows}, {"aggregates", aggregates}};
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::string density_scan_csv(const ResultRecord& record) {
  std::ostringstream out;
  out << "d,ell,sc16_rate,mean_piece_ratio,n_seeds\n";
  for (const auto& a : record.outputs.at("aggregates"))
    out << a.at("d").get<double>() << "," << a.at("ell").get<int>() << ","
        << a.at("sc16_rate").get<double>() << "," << a.at("mean_piece_ratio").get<double>() << ","
        << a.at("n_seeds").get<long long>() << "\n";
  return out.str();
}

std::string curve_csv(const ResultRecord& record) {
  std::ostringstream out;
  out << "seed,d,ell,eta_lower,eta_point,theta_lower,theta_point,cert_upper\n";
  for (const auto& row : record.outputs.at("cells")) {
    out << row.at("seed_index").get<int>() << "," << row.at("d").get<double>() << ","
        << row.at("ell").get<int>() << ",";
    auto field = [&](const char* name) {
      if (row.contains(name)) out << row.at(name).get<double>();
      out << (std::strcmp(name, "cert_upper") == 0 ? "\n" : ",");
    };
    field("eta_lower");
    field("eta_point");
    field("theta_lower");
    field("theta_point");
    field("cert_upper");
  }
  return out.str();
}

}  // namespace cglab
