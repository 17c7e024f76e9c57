#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cglab/cayley_ball.hpp"
#include "cglab/counting.hpp"
#include "cglab/oracle.hpp"
#include "reference_oracles.hpp"

using namespace cglab;

TEST_CASE("free counts: brute force, closed form, and DP agree") {
  FreeOracle free2(2);
  CayleyBall b = build_ball(free2, 2, 5);
  CHECK(count_trivial_words(b, 2) == 4);
  CHECK(count_trivial_words(b, 4) == 28);
  CHECK(refor::brute_force_trivial_count(free2, 2, 2) == 4);
  CHECK(refor::brute_force_trivial_count(free2, 2, 4) == 28);
  for (int l = 0; l <= 10; l++)
    CHECK(count_trivial_words(b, l) == refor::free_tree_walk_count(2, l));
  // odd lengths vanish
  CHECK(count_trivial_words(b, 5) == 0);
}

TEST_CASE("insufficient radius raises") {
  FreeOracle free2(2);
  CayleyBall b = build_ball(free2, 2, 2);
  CHECK_THROWS_AS(count_trivial_words(b, 5), InsufficientRadiusError);
  CHECK(count_trivial_words(b, 4) == 28);
}

TEST_CASE("abelian counts match the closed form and exhaustive counts") {
  AbelianOracle ab(2);
  CayleyBall b = build_ball(ab, 2, 8);
  for (int n = 1; n <= 8; n++)
    CHECK(count_trivial_words(b, 2 * n) == refor::z2_walk_count(2 * n));
  CHECK(count_trivial_reduced_words(b, 4) == 8);
  CHECK(refor::brute_force_reduced_trivial_count(ab, 2, 4) == 8);
  // reduced reference DP cross-check
  CountTable red = count_table(b, WordKind::reduced);
  for (int l = 0; l <= 14; l++) CHECK(red.at(l) == refor::z2_reduced_count(l));
}

TEST_CASE("free reduced counts vanish at every positive length") {
  FreeOracle free2(2);
  CayleyBall b = build_ball(free2, 2, 6);
  CountTable red = count_table(b, WordKind::reduced);
  CHECK(red.at(0) == 1);
  for (int l = 1; l <= 12; l++) CHECK(red.at(l) == 0);
}

TEST_CASE("oracle equivalence up to length 10: DP equals brute force") {
  AbelianOracle ab(2);
  CayleyBall b = build_ball(ab, 2, 5);
  for (int l = 0; l <= 10; l++)
    CHECK(count_trivial_words(b, l) == refor::brute_force_trivial_count(ab, 2, l));
}

TEST_CASE("superadditivity of computed plain tables") {
  for (int which = 0; which < 2; which++) {
    std::unique_ptr<TrivialityOracle> oracle;
    if (which == 0)
      oracle = std::make_unique<FreeOracle>(2);
    else
      oracle = std::make_unique<AbelianOracle>(2);
    CayleyBall b = build_ball(*oracle, 2, 7);
    CountTable plain = count_table(b, WordKind::plain);
    for (int a = 1; a <= plain.exact_up_to; a++)
      for (int c = a; a + c <= plain.exact_up_to; c++)
        CHECK(plain.at(a + c) >= plain.at(a) * plain.at(c));
    // reduced near-superadditivity with the +2 shift
    CountTable red = count_table(b, WordKind::reduced);
    for (int a = 1; a + a + 2 <= red.exact_up_to; a++)
      for (int c = a; a + c + 2 <= red.exact_up_to; c++)
        CHECK(red.at(a + c + 2) >= red.at(a) * red.at(c));
  }
}

TEST_CASE("spectral bound: radius-0 ball gives zero") {
  FreeOracle free2(2);
  CayleyBall b = build_ball(free2, 2, 0);
  auto res = spectral_radius_lower_bound(b);
  CHECK(res.converged);
  CHECK(res.value == doctest::Approx(0.0));
}

TEST_CASE("spectral bound on free balls: known Dirichlet values, monotone in radius") {
  FreeOracle free2(2);
  double prev = 0.0;
  for (int radius : {4, 6, 8}) {
    CayleyBall b = build_ball(free2, 2, radius);
    auto res = spectral_radius_lower_bound(b, 20000, 1e-12);
    CHECK(res.converged);
    CHECK(res.value > prev);              // nondecreasing in radius
    CHECK(res.value < std::sqrt(3.0) / 2.0);  // strict lower bound
    prev = res.value;
  }
  // radius-8 Dirichlet value from the independent radial computation
  CayleyBall b8 = build_ball(free2, 2, 8);
  CHECK(spectral_radius_lower_bound(b8, 20000, 1e-12).value ==
        doctest::Approx(0.830015).epsilon(1e-4));
}

TEST_CASE("spectral bound on abelian balls trends to 1") {
  AbelianOracle ab(2);
  CayleyBall b = build_ball(ab, 2, 16);
  auto res = spectral_radius_lower_bound(b, 40000, 1e-12);
  CHECK(res.value >= 0.95);
  CHECK(res.value < 1.0);
}

TEST_CASE("monte carlo return probability") {
  FreeOracle free2(2);
  Rng rng(556);
  auto res = monte_carlo_return(free2, 2, 2, 200000, rng);
  CHECK(res.ci_low <= 0.25);
  CHECK(0.25 <= res.ci_high);
  CHECK(res.estimate == doctest::Approx(0.25).epsilon(0.02));
  auto res4 = monte_carlo_return(free2, 2, 4, 200000, rng);
  CHECK(res4.ci_low <= 28.0 / 256.0);
  CHECK(28.0 / 256.0 <= res4.ci_high);
  // length 1 in a group with no length-1 relation
  auto res1 = monte_carlo_return(free2, 2, 1, 1000, rng);
  CHECK(res1.estimate == 0.0);
}

TEST_CASE("monte carlo CI covers the exact value in >= 93% of repeated runs") {
  FreeOracle free2(2);
  Rng rng(4242);
  const double exact = 28.0 / 256.0;
  int covered = 0;
  const int reps = 150;
  for (int i = 0; i < reps; i++) {
    Rng sub = rng.substream(static_cast<std::uint64_t>(i));
    auto res = monte_carlo_return(free2, 2, 4, 10000, sub);
    if (res.ci_low <= exact && exact <= res.ci_high) covered++;
  }
  CHECK(static_cast<double>(covered) / reps >= 0.93);
}
