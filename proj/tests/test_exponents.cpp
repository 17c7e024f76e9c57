#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cglab/cayley_ball.hpp"
#include "cglab/counting.hpp"
#include "cglab/dehn.hpp"
#include "cglab/exponents.hpp"
#include "reference_oracles.hpp"

using namespace cglab;

TEST_CASE("theta lower bound on free counts") {
  FreeOracle free2(2);
  CayleyBall b = build_ball(free2, 2, 10);
  CountTable plain = count_table(b, WordKind::plain);
  auto bound = theta_lower_bound(plain);
  // (1/2) log_4 |W_2| = 0.5 at l=2; the max is attained at l=20
  CHECK(bound.best_length == 20);
  // exact value from the independent tree oracle: (1/20) log_4 2240795848
  CHECK(bound.value == doctest::Approx(0.776534).epsilon(1e-5));
  CHECK(bound.value < free_group_theta(2));
  // l=2 alone gives exactly 1/2
  CayleyBall b1 = build_ball(free2, 2, 1);
  CHECK(theta_lower_bound(count_table(b1, WordKind::plain)).value == doctest::Approx(0.5));
}

TEST_CASE("theta lower bound is nondecreasing as lengths accumulate") {
  FreeOracle free2(2);
  CayleyBall b = build_ball(free2, 2, 9);
  CountTable plain = count_table(b, WordKind::plain);
  double prev = 0.0;
  for (int upto = 2; upto <= plain.exact_up_to; upto += 2) {
    CountTable partial = plain;
    partial.exact_up_to = upto;
    partial.counts.resize(static_cast<std::size_t>(upto) + 1);
    double v = theta_lower_bound(partial).value;
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("eta lower bound: free convention and abelian growth") {
  FreeOracle free2(2);
  CayleyBall bf = build_ball(free2, 2, 6);
  auto ef = eta_lower_bound(count_table(bf, WordKind::reduced));
  CHECK(ef.empty_kernel);
  CHECK(ef.value == 0.5);

  AbelianOracle ab(2);
  CayleyBall ba = build_ball(ab, 2, 8);
  CountTable red = count_table(ba, WordKind::reduced);
  auto ea = eta_lower_bound(red);
  CHECK_FALSE(ea.empty_kernel);
  CHECK(ea.value > 0.5);
  CHECK(ea.value < 1.0);
  // independent value: (log_3 |W'_16| - 2)/16 with |W'_16| from the Z^2 DP
  double expect = (std::log(refor::z2_reduced_count(16).get_d()) / std::log(3.0) - 2.0) / 16.0;
  double expect14 = (std::log(refor::z2_reduced_count(14).get_d()) / std::log(3.0) - 2.0) / 14.0;
  CHECK(ea.value == doctest::Approx(std::max(expect, expect14)).epsilon(1e-9));
}

TEST_CASE("eta floor: a single tiny count stays at 1/2 with raw preserved") {
  CountTable t;
  t.kind = WordKind::reduced;
  t.base = 3;
  t.exact_up_to = 8;
  t.counts.assign(9, mpz_class(0));
  t.counts[0] = 1;
  t.counts[8] = 1;  // a lone relation: raw bound (0-2)/8 < 0 floors to 1/2
  auto e = eta_lower_bound(t);
  CHECK_FALSE(e.empty_kernel);
  CHECK(e.value == 0.5);
  CHECK(e.raw == doctest::Approx(-0.25));
}

TEST_CASE("grigorchuk formula endpoints and known values") {
  CHECK(grigorchuk_theta_from_eta(1.0, 2) == doctest::Approx(1.0));
  CHECK(grigorchuk_theta_from_eta(0.5, 2) == doctest::Approx(0.8962406520));
  CHECK(grigorchuk_theta_from_eta(0.5, 3) == doctest::Approx(0.8359756567));
  CHECK(free_group_theta(2) == doctest::Approx(0.8962406520));
  CHECK(grigorchuk_eta_from_theta(1.0, 2) == doctest::Approx(1.0));
  CHECK(grigorchuk_eta_from_theta(free_group_theta(2), 2) == doctest::Approx(0.5));
  CHECK_THROWS_AS(grigorchuk_theta_from_eta(0.4, 2), std::domain_error);
  CHECK_THROWS_AS(grigorchuk_eta_from_theta(0.80, 2), NoSolutionError);
  CHECK_THROWS_AS(grigorchuk_eta_from_theta(1.1, 2), std::domain_error);
}

TEST_CASE("grigorchuk round trip on a 20-point grid, both directions, 1e-12") {
  // eta -> theta -> eta: the inverse has a square-root branch point at
  // eta = 1/2 (conditioning ~1e-8 in doubles), so the 20 grid points sit in
  // (1/2, 1]; the branch point itself is exercised separately below.
  for (int m : {2, 3, 4}) {
    double prev_theta = 0.0;
    for (int i = 1; i <= 20; i++) {
      double eta = 0.5 + 0.5 * i / 20.0;
      double theta = grigorchuk_theta_from_eta(eta, m);
      CHECK(theta > prev_theta);  // strictly increasing: eta and theta vary together
      prev_theta = theta;
      CHECK(grigorchuk_eta_from_theta(theta, m) == doctest::Approx(eta).epsilon(1e-12));
      CHECK(theta >= 0.5 - 1e-12);
      CHECK(theta <= 1.0 + 1e-12);
    }
    // theta -> eta -> theta is well conditioned on the whole closed interval
    double tf = free_group_theta(m);
    for (int i = 0; i <= 20; i++) {
      double theta = tf + (1.0 - tf) * i / 20.0;
      double eta = grigorchuk_eta_from_theta(theta, m);
      CHECK(grigorchuk_theta_from_eta(eta, m) == doctest::Approx(theta).epsilon(1e-12));
    }
    // branch point: the free-group theta recovers eta = 1/2 to conditioning
    CHECK(grigorchuk_eta_from_theta(grigorchuk_theta_from_eta(0.5, m), m) ==
          doctest::Approx(0.5).epsilon(1e-6));
  }
}

TEST_CASE("estimate_exponents on the free fixture") {
  FreeOracle free2(2);
  Presentation p;
  p.generator_count = 2;
  auto est = estimate_exponents(p, free2, 10);
  CHECK(est.eta.empty_kernel);
  CHECK(est.eta.lower_bound == 0.5);
  CHECK(est.eta.point_estimate == 0.5);
  CHECK(est.theta.lower_bound == doctest::Approx(0.776534).epsilon(1e-5));
  // two-point slope at (18, 20), exact from the tree oracle
  double slope = (std::log(refor::free_tree_walk_count(2, 20).get_d()) -
                  std::log(refor::free_tree_walk_count(2, 18).get_d())) /
                 (std::log(4.0) * 2.0);
  CHECK(est.theta.point_estimate == doctest::Approx(slope).epsilon(1e-9));
  CHECK(est.theta.window_lo == 18);
  CHECK(est.theta.window_hi == 20);
  CHECK(est.ball_radius == 10);
}

TEST_CASE("estimate_exponents on the abelian fixture at radius 16") {
  AbelianOracle ab(2);
  Presentation p;
  p.generator_count = 2;
  p.relators = {Word{1, 2, -1, -2}};
  auto est = estimate_exponents(p, ab, 16);
  // point estimates both >= 0.9 (the lower bounds converge much slower)
  CHECK(est.eta.point_estimate >= 0.9);
  CHECK(est.theta.point_estimate >= 0.9);
  CHECK(est.eta.lower_bound > 0.5);
  // everything lands in [1/2, 1] up to slack
  for (double v : {est.eta.lower_bound, est.eta.point_estimate, est.theta.lower_bound,
                   est.theta.point_estimate}) {
    CHECK(v >= 0.5 - 1e-9);
    CHECK(v <= 1.0 + 1e-9);
  }
}

TEST_CASE("estimates truncate on budget instead of failing") {
  FreeOracle free2(2);
  Presentation p;
  p.generator_count = 2;
  auto est = estimate_exponents(p, free2, 12, 500);
  CHECK(est.ball_radius < 12);
  CHECK(est.theta.lower_bound > 0.5);
}
