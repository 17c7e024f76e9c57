#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cglab/experiment.hpp"
#include "cglab/io.hpp"

using namespace cglab;

TEST_CASE("presentation text format round trip with comments") {
  Presentation p;
  p.generator_count = 2;
  p.relators = {Word::parse("abAB"), Word::parse("aabb")};
  std::string text = to_text(p);
  Presentation q = presentation_from_text("# a comment\n" + text + "  # trailing\n");
  CHECK(q.generator_count == 2);
  REQUIRE(q.relators.size() == 2);
  CHECK(q.relators[0] == p.relators[0]);
  CHECK(q.relators[1] == p.relators[1]);
  CHECK_THROWS_AS(presentation_from_text("abAB\n"), std::invalid_argument);
}

TEST_CASE("count table CSV round trip") {
  CountTable t;
  t.kind = WordKind::plain;
  t.base = 4;
  t.exact_up_to = 3;
  t.counts = {mpz_class(1), mpz_class(0), mpz_class(4), mpz_class("123456789012345678901234567890")};
  CountTable u = count_table_from_csv(to_csv(t));
  CHECK(u.kind == t.kind);
  CHECK(u.base == t.base);
  CHECK(u.exact_up_to == t.exact_up_to);
  for (int l = 0; l <= 3; l++) CHECK(u.at(l) == t.at(l));
}

TEST_CASE("density scan: determinism and per-seed isolation") {
  ExperimentConfig cfg;
  cfg.generator_count = 2;
  cfg.densities = {0.1, 0.2};
  cfg.lengths = {8};
  cfg.seeds_per_cell = 4;
  cfg.seed = 99;
  ResultRecord a = run_density_scan(cfg);
  ResultRecord b = run_density_scan(cfg);
  CHECK(a.to_json(false) == b.to_json(false));  // byte-identical modulo timestamps
  // removing a seed leaves the other seeds' rows unchanged
  ExperimentConfig fewer = cfg;
  fewer.seeds_per_cell = 3;
  ResultRecord c = run_density_scan(fewer);
  const auto& cells_a = a.outputs.at("cells");
  const auto& cells_c = c.outputs.at("cells");
  std::size_t ia = 0, ic = 0;
  for (double d : cfg.densities) {
    (void)d;
    for (int s = 0; s < cfg.seeds_per_cell; s++, ia++) {
      if (s >= fewer.seeds_per_cell) continue;
      CHECK(cells_a.at(ia) == cells_c.at(ic));
      ic++;
    }
  }
}

TEST_CASE("density scan aggregates carry rates and piece ratios") {
  ExperimentConfig cfg;
  cfg.densities = {0.05};
  cfg.lengths = {16};
  cfg.seeds_per_cell = 5;
  cfg.seed = 7;
  ResultRecord rec = run_density_scan(cfg);
  const auto& agg = rec.outputs.at("aggregates").at(0);
  CHECK(agg.at("n_seeds").get<int>() == 5);
  CHECK(agg.at("mean_piece_ratio").get<double>() > 0.0);
  CHECK(agg.at("sc16_rate").get<double>() >= 0.0);
  std::string csv = density_scan_csv(rec);
  CHECK(csv.rfind("d,ell,sc16_rate,mean_piece_ratio,n_seeds\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);  // header + one aggregate row
}

TEST_CASE("curve run records C'(1/6) refusals without estimating") {
  // at m=2, l=12 every presentation fails C'(1/6) (pigeonhole on 2-grams),
  // so the gate must refuse every seed rather than estimate unsoundly
  ExperimentConfig cfg;
  cfg.densities = {0.08};
  cfg.lengths = {12};
  cfg.seeds_per_cell = 5;
  cfg.radius = 4;
  cfg.seed = 3;
  ResultRecord rec = run_cogrowth_curve(cfg);
  const auto& agg = rec.outputs.at("aggregates").at(0);
  CHECK(agg.at("n_estimates").get<int>() == 0);
  CHECK(agg.at("n_refused_c16").get<int>() == 5);
}

TEST_CASE("curve run on the free baseline (d=0 collapses to one relator)") {
  // d = 0 gives a single relator; length 19+ passes C'(1/6) often, so some
  // seeds produce estimates with eta floored at 1/2 raw metadata preserved
  ExperimentConfig cfg;
  cfg.densities = {0.0};
  cfg.lengths = {19};
  cfg.seeds_per_cell = 12;
  cfg.radius = 4;
  cfg.seed = 11;
  ResultRecord rec = run_cogrowth_curve(cfg);
  const auto& agg = rec.outputs.at("aggregates").at(0);
  int estimates = agg.at("n_estimates").get<int>();
  CHECK(estimates > 0);
  for (const auto& row : rec.outputs.at("cells")) {
    if (!row.contains("eta_lower")) continue;
    CHECK(row.at("eta_lower").get<double>() >= 0.5);
    // radius 4 < girth/2: the kernel window is empty at these lengths
    CHECK(row.at("eta_empty_kernel").get<bool>());
  }
  std::string csv = curve_csv(rec);
  CHECK(csv.rfind("seed,d,ell,eta_lower,eta_point,theta_lower,theta_point,cert_upper\n", 0) == 0);
}

TEST_CASE("gate: cells at d >= 1/12 run piece statistics only") {
  ExperimentConfig cfg;
  cfg.densities = {0.2};
  cfg.lengths = {10};
  cfg.seeds_per_cell = 2;
  cfg.radius = 4;
  cfg.seed = 5;
  ResultRecord rec = run_cogrowth_curve(cfg);
  for (const auto& row : rec.outputs.at("cells")) {
    CHECK(row.contains("gated"));
    CHECK(row.contains("piece_ratio"));
    CHECK_FALSE(row.contains("eta_point"));
  }
}

TEST_CASE("worker threads do not change results") {
  ExperimentConfig cfg;
  cfg.densities = {0.1, 0.2};
  cfg.lengths = {10};
  cfg.seeds_per_cell = 4;
  cfg.seed = 8;
  ResultRecord seq = run_density_scan(cfg);
  cfg.threads = 3;
  ResultRecord par = run_density_scan(cfg);
  json a = seq.to_json(false), b = par.to_json(false);
  a["config"].erase("threads");
  b["config"].erase("threads");
  CHECK(a == b);
}

TEST_CASE("curve runs are deterministic modulo timestamps") {
  ExperimentConfig cfg;
  cfg.densities = {0.0};
  cfg.lengths = {13};
  cfg.seeds_per_cell = 6;
  cfg.radius = 4;
  cfg.seed = 77;
  ResultRecord a = run_cogrowth_curve(cfg);
  ResultRecord b = run_cogrowth_curve(cfg);
  CHECK(a.to_json(false) == b.to_json(false));
}

TEST_CASE("experiment config JSON round trip") {
  ExperimentConfig cfg;
  cfg.generator_count = 3;
  cfg.densities = {0.1, 0.3};
  cfg.lengths = {8, 10};
  cfg.kind = WordKind::plain;
  cfg.seeds_per_cell = 9;
  cfg.radius = 6;
  cfg.seed = 42;
  cfg.iso_constant = 0.25;
  ExperimentConfig back = ExperimentConfig::from_json(cfg.to_json());
  CHECK(back.to_json() == cfg.to_json());
}

TEST_CASE("result record json embeds config, seed, version") {
  ExperimentConfig cfg;
  cfg.densities = {0.0};
  cfg.lengths = {6};
  cfg.seeds_per_cell = 1;
  cfg.seed = 1;
  ResultRecord rec = run_density_scan(cfg);
  json j = rec.to_json();
  CHECK(j.at("seed").get<std::uint64_t>() == 1);
  CHECK(j.at("artifact_version").get<std::string>() == kArtifactVersion);
  CHECK(j.contains("wall_ms"));
  CHECK(j.at("config").at("experiment") == "density-scan");
}
