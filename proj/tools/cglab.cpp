// Command-line laboratory: sampling random presentations, small-cancellation
// checks, exact counting, exponent estimation, locality certificates, density
// scans, cogrowth curves, and van Kampen diagram search.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>

#include "cglab/dehn.hpp"
#include "cglab/diagram_search.hpp"
#include "cglab/experiment.hpp"
#include "cglab/exponents.hpp"
#include "cglab/io.hpp"
#include "cglab/locality.hpp"

using namespace cglab;

namespace {

std::string out_dir_prefix(const std::string& path) {
  const char* dir = std::getenv("CGLAB_OUT");
  if (!dir || path.empty() || path.front() == '/') return path;
  return std::string(dir) + "/" + path;
}

int env_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  const char* t = std::getenv("CGLAB_THREADS");
  return t ? std::max(1, std::atoi(t)) : 1;
}

std::unique_ptr<TrivialityOracle> make_oracle(const std::string& name, const Presentation& p) {
  if (name == "free") return std::make_unique<FreeOracle>(p.generator_count);
  if (name == "abelian") return std::make_unique<AbelianOracle>(p.generator_count);
  if (name == "dehn") return std::make_unique<DehnOracle>(p);
  throw std::invalid_argument("unknown oracle: " + name);
}

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
  if (path.empty()) return;
  cfg = ExperimentConfig::from_json(json::parse(read_file(path)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cglab: a computational laboratory for cogrowth of random groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::uint64_t seed = 0;
  std::string out;
  int threads = 0;
  long long budget = 2'000'000;
  app.add_option("--seed", seed, "root RNG seed")->capture_default_str();
  app.add_option("--out", out, "output path or prefix");
  app.add_option("--threads", threads, "worker threads (env CGLAB_THREADS)");
  app.add_option("--budget", budget, "element/relator budget")->capture_default_str();

  // sample
  auto* sample = app.add_subcommand("sample", "sample a density-model presentation");
  sample->fallthrough();
  int s_m = 2, s_ell = 12;
  double s_d = 0.1;
  std::string s_kind = "reduced";
  sample->add_option("--m", s_m, "generators")->capture_default_str();
  sample->add_option("--d", s_d, "density in [0,1]")->capture_default_str();
  sample->add_option("--ell", s_ell, "relator length")->capture_default_str();
  sample->add_option("--kind", s_kind, "plain|reduced")->capture_default_str();

  // sc-check
  auto* sc = app.add_subcommand("sc-check", "small-cancellation C'(alpha) analysis");
  sc->fallthrough();
  std::string sc_input;
  long long sc_num = 1, sc_den = 6;
  sc->add_option("--input", sc_input, "presentation file")->required();
  sc->add_option("--alpha-num", sc_num)->capture_default_str();
  sc->add_option("--alpha-den", sc_den)->capture_default_str();

  // count
  auto* count = app.add_subcommand("count", "exact trivial-word count tables");
  count->fallthrough();
  std::string c_input, c_oracle = "dehn", c_ball_dump;
  int c_radius = 6;
  long long c_mc_trials = 0;
  count->add_option("--input", c_input, "presentation file")->required();
  count->add_option("--oracle", c_oracle, "dehn|free|abelian")->capture_default_str();
  count->add_option("--radius", c_radius, "ball radius")->capture_default_str();
  count->add_option("--ball-dump", c_ball_dump, "debug dump: index, normal form, adjacency");
  count->add_option("--mc-trials", c_mc_trials,
                    "cross-check the top even length by Monte Carlo return frequency");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "cogrowth exponent estimates");
  estimate->fallthrough();
  std::string e_input, e_oracle = "dehn";
  int e_radius = 6;
  double e_C = 0.0;
  estimate->add_option("--input", e_input, "presentation file")->required();
  estimate->add_option("--oracle", e_oracle, "dehn|free|abelian")->capture_default_str();
  estimate->add_option("--radius", e_radius)->capture_default_str();
  estimate->add_option("--C", e_C, "isoperimetric constant (0 = no certificate)");

  // certify
  auto* certify = app.add_subcommand("certify", "locality certificate from a count table");
  certify->fallthrough();
  std::string cf_counts;
  double cf_C = 0.5, cf_A = 0.0;
  int cf_lambda = 1, cf_m = 2;
  certify->add_option("--counts", cf_counts, "count table CSV")->required();
  certify->add_option("--C", cf_C, "isoperimetric constant")->required();
  certify->add_option("--lambda", cf_lambda, "max relator length")->required();
  certify->add_option("--A", cf_A, "window scale (window [A*lambda/4, A*lambda])")->required();
  certify->add_option("--m", cf_m, "generators")->required();

  // scan-density
  auto* scan = app.add_subcommand("scan-density", "piece statistics across densities");
  scan->fallthrough();
  ExperimentConfig scan_cfg;
  std::string scan_config_file;
  scan->add_option("--config", scan_config_file, "JSON config mirroring the experiment");
  scan->add_option("--m", scan_cfg.generator_count)->capture_default_str();
  scan->add_option("--d", scan_cfg.densities, "density grid");
  scan->add_option("--ell", scan_cfg.lengths, "relator lengths");
  scan->add_option("--seeds", scan_cfg.seeds_per_cell)->capture_default_str();
  scan->add_option("--radius", scan_cfg.radius, "0 = skip exponent estimates");

  // curve
  auto* curve = app.add_subcommand("curve", "cogrowth curves below the d<1/12 gate");
  curve->fallthrough();
  ExperimentConfig curve_cfg;
  std::string curve_config_file;
  double curve_C = 0.0;
  curve->add_option("--config", curve_config_file, "JSON config mirroring the experiment");
  curve->add_option("--m", curve_cfg.generator_count)->capture_default_str();
  curve->add_option("--d", curve_cfg.densities, "density grid");
  curve->add_option("--ell", curve_cfg.lengths, "relator lengths");
  curve->add_option("--seeds", curve_cfg.seeds_per_cell)->capture_default_str();
  curve->add_option("--radius", curve_cfg.radius)->capture_default_str();
  curve->add_option("--C", curve_C, "isoperimetric constant for certificates");

  // vk-search
  auto* vk = app.add_subcommand("vk-search", "bounded-face van Kampen diagram search");
  vk->fallthrough();
  std::string vk_input, vk_word, vk_dot;
  int vk_faces = 2;
  vk->add_option("--input", vk_input, "presentation file")->required();
  vk->add_option("--word", vk_word, "word in a/A letters")->required();
  vk->add_option("--max-faces", vk_faces)->capture_default_str();
  vk->add_option("--dot", vk_dot, "also write a dot rendering here");

  // is-trivial
  auto* trivial = app.add_subcommand("is-trivial", "decide triviality of a word");
  trivial->fallthrough();
  std::string t_input, t_word, t_oracle = "dehn";
  bool t_trace = false;
  trivial->add_option("--input", t_input, "presentation file")->required();
  trivial->add_option("--word", t_word, "word in a/A letters")->required();
  trivial->add_option("--oracle", t_oracle, "dehn|free|abelian")->capture_default_str();
  trivial->add_flag("--trace", t_trace, "print one line per Dehn step");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample) {
      DensityConfig dc{s_m, s_d, s_ell, s_kind == "plain" ? WordKind::plain : WordKind::reduced};
      Rng rng(seed);
      SampleInfo info;
      Presentation p = sample_density_presentation(dc, rng, budget, &info);
      std::string path = out_dir_prefix(out.empty() ? "presentation.txt" : out);
      write_file(path, to_text(p));
      json sidecar{{"seed", seed},
                   {"d", s_d},
                   {"ell", s_ell},
                   {"kind", s_kind},
                   {"m", s_m},
                   {"requested", info.requested},
                   {"dropped_trivial", info.dropped_trivial}};
      write_file(path + ".json", sidecar.dump(2) + "\n");
      std::cout << "wrote " << p.relators.size() << " relators to " << path << "\n";
    } else if (*sc) {
      Presentation p = presentation_from_text(read_file(out_dir_prefix(sc_input)));
      auto res = check_small_cancellation(p, Ratio{sc_num, sc_den});
      std::cout << "C'(" << sc_num << "/" << sc_den << "): "
                << (res.satisfied ? "satisfied" : "violated")
                << "  max piece " << res.report.max_piece_length << " of lambda "
                << p.max_relator_length() << "\n";
      if (res.report.max_piece_length > 0) {
        const auto& w = res.report.witness;
        std::cout << "witness: relator " << w[0].relator << " orient " << w[0].orientation
                  << " pos " << w[0].position << "  <->  relator " << w[1].relator << " orient "
                  << w[1].orientation << " pos " << w[1].position << "\n";
      }
      if (!out.empty()) {
        json hist;
        for (auto& [len, cnt] : res.report.piece_length_histogram)
          hist[std::to_string(len)] = cnt;
        json j{{"satisfied", res.satisfied},
               {"max_piece", res.report.max_piece_length},
               {"histogram", hist}};
        write_file(out_dir_prefix(out), j.dump(2) + "\n");
      }
    } else if (*count) {
      Presentation p = presentation_from_text(read_file(out_dir_prefix(c_input)));
      auto oracle = make_oracle(c_oracle, p);
      CayleyBall ball = build_ball(*oracle, p.generator_count, c_radius,
                                   static_cast<std::size_t>(budget));
      std::string prefix = out.empty() ? "counts" : out;
      CountTable plain = count_table(ball, WordKind::plain);
      write_file(out_dir_prefix(prefix + ".plain.csv"), to_csv(plain));
      write_file(out_dir_prefix(prefix + ".reduced.csv"),
                 to_csv(count_table(ball, WordKind::reduced)));
      std::cout << "ball radius " << ball.radius << ", " << ball.size()
                << " elements; tables exact up to length " << 2 * ball.radius << "\n";
      if (!c_ball_dump.empty()) {
        std::ostringstream dump;
        for (std::size_t e = 0; e < ball.size(); e++) {
          dump << e << "\t" << ball.elements[e].str();
          for (int col = 0; col < 2 * p.generator_count; col++)
            dump << "\t"
                 << ball.adjacency[e * 2 * static_cast<std::size_t>(p.generator_count) +
                                   static_cast<std::size_t>(col)];
          dump << "\n";
        }
        write_file(out_dir_prefix(c_ball_dump), dump.str());
      }
      if (c_mc_trials > 0) {
        int l = 2 * ball.radius;
        Rng rng(seed);
        auto mc = monte_carlo_return(*oracle, p.generator_count, l, c_mc_trials, rng);
        mpf_class exact_prob(plain.at(l));
        mpz_class denom(1);
        for (int i = 0; i < l; i++) denom *= 2 * p.generator_count;
        exact_prob /= mpf_class(denom);
        std::cout << "monte carlo at l=" << l << ": " << mc.estimate << " in [" << mc.ci_low
                  << ", " << mc.ci_high << "], exact " << exact_prob.get_d() << "\n";
      }
    } else if (*estimate) {
      Presentation p = presentation_from_text(read_file(out_dir_prefix(e_input)));
      auto oracle = make_oracle(e_oracle, p);
      std::optional<double> C;
      if (e_C > 0) C = e_C;
      EstimatePair est = estimate_exponents(p, *oracle, e_radius,
                                            static_cast<std::size_t>(budget), C);
      json j = to_json(est);
      j["seed"] = seed;
      std::cout << "eta  lower " << est.eta.lower_bound << "  point " << est.eta.point_estimate
                << (est.eta.empty_kernel ? "  (empty kernel)" : "") << "\n";
      std::cout << "theta lower " << est.theta.lower_bound << "  point "
                << est.theta.point_estimate << "\n";
      if (!out.empty()) write_file(out_dir_prefix(out), j.dump(2) + "\n");
    } else if (*certify) {
      CountTable t = count_table_from_csv(read_file(out_dir_prefix(cf_counts)));
      LocalityCertificate cert = certify_upper_bound(t, cf_C, cf_lambda, cf_A, cf_m);
      std::cout << "certified exponent " << cert.certified_exponent << " = eta_window "
                << cert.eta_window << " x factor " << cert.factor << " (exp bound "
                << cert.exp_bound << ", B " << cert.B << ", window [" << cert.window_lo << ", "
                << cert.window_hi << "])\n";
      if (!out.empty()) write_file(out_dir_prefix(out), to_json(cert).dump(2) + "\n");
    } else if (*scan) {
      apply_config_file(scan_cfg, scan_config_file);
      scan_cfg.seed = seed;
      scan_cfg.threads = env_threads(threads);
      scan_cfg.relator_budget = budget;
      ResultRecord rec = run_density_scan(scan_cfg);
      std::string prefix = out.empty() ? "density_scan" : out;
      write_file(out_dir_prefix(prefix + ".json"), rec.to_json().dump(2) + "\n");
      write_file(out_dir_prefix(prefix + ".csv"), density_scan_csv(rec));
      std::cout << density_scan_csv(rec);
    } else if (*curve) {
      apply_config_file(curve_cfg, curve_config_file);
      curve_cfg.seed = seed;
      curve_cfg.threads = env_threads(threads);
      curve_cfg.relator_budget = budget;
      if (curve_C > 0) curve_cfg.iso_constant = curve_C;
      ResultRecord rec = run_cogrowth_curve(curve_cfg);
      std::string prefix = out.empty() ? "curve" : out;
      write_file(out_dir_prefix(prefix + ".json"), rec.to_json().dump(2) + "\n");
      write_file(out_dir_prefix(prefix + ".csv"), curve_csv(rec));
      for (const auto& agg : rec.outputs.at("aggregates"))
        std::cout << "d=" << agg.at("d") << " ell=" << agg.at("ell") << " estimates="
                  << agg.at("n_estimates") << " refused=" << agg.at("n_refused_c16")
                  << (agg.contains("median_eta_point")
                          ? "  median eta " + agg.at("median_eta_point").dump()
                          : std::string())
                  << "\n";
    } else if (*vk) {
      Presentation p = presentation_from_text(read_file(out_dir_prefix(vk_input)));
      Word w = Word::parse(vk_word);
      SearchResult res = search_diagram(p, w, vk_faces, budget);
      switch (res.status) {
        case SearchStatus::found: {
          DiagramMetrics mm = metrics(*res.diagram);
          std::cout << "found: faces " << mm.face_count << ", area " << mm.area
                    << ", boundary " << mm.boundary_length << " (" << res.nodes << " nodes)\n";
          if (!out.empty()) write_file(out_dir_prefix(out), to_json(*res.diagram).dump(2) + "\n");
          if (!vk_dot.empty()) write_file(out_dir_prefix(vk_dot), to_dot(*res.diagram));
          break;
        }
        case SearchStatus::none:
          std::cout << "none: no diagram with <= " << vk_faces << " faces (" << res.nodes
                    << " nodes)\n";
          break;
        case SearchStatus::budget_exceeded:
          std::cout << "indeterminate: budget exceeded after " << res.nodes << " nodes\n";
          break;
      }
    } else if (*trivial) {
      Presentation p = presentation_from_text(read_file(out_dir_prefix(t_input)));
      Word w = Word::parse(t_word);
      bool verdict;
      if (t_oracle == "dehn") {
        DehnOracle dehn(p);
        verdict = dehn.is_trivial_traced(w, t_trace ? [](const DehnStep& s) {
          std::cout << s.len_before << ", " << s.relator << ", " << s.offset << ", "
                    << s.len_after << "\n";
        } : std::function<void(const DehnStep&)>());
      } else {
        verdict = make_oracle(t_oracle, p)->is_trivial(w);
      }
      std::cout << (verdict ? "trivial" : "nontrivial") << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
