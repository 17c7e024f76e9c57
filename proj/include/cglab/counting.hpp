#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "cglab/cayley_ball.hpp"
#include "cglab/errors.hpp"
#include "cglab/oracle.hpp"
#include "cglab/presentation.hpp"
#include "cglab/rng.hpp"

namespace cglab {

/// Exact big-integer counts of trivial words by length. `plain` counts |W_l|
/// (all words), `reduced` counts |W'_l| (freely reduced words). Entries run
/// from 0 to exact_up_to inclusive; odd entries may legitimately be zero.
struct CountTable {
  WordKind kind = WordKind::plain;
  int base = 0;  // 2m for plain, 2m-1 for reduced
  int exact_up_to = -1;
  std::vector<mpz_class> counts;

  const mpz_class& at(int length) const;
  std::uint64_t fingerprint() const;  // FNV-1a over kind/base/decimal counts
};

/// Closed-walk vector-transfer DP on the ball. Exact for every length up to
/// 2*radius (a closed walk of length l never leaves the radius-ceil(l/2)
/// ball). max_length defaults to 2*radius; larger values are refused.
CountTable count_table(const CayleyBall& ball, WordKind kind, int max_length = -1);

/// Exact |W_l|; requires ball radius >= ceil(l/2).
mpz_class count_trivial_words(const CayleyBall& ball, int length);
/// Exact |W'_l| via the (element, last letter) DP forbidding backtracking.
mpz_class count_trivial_reduced_words(const CayleyBall& ball, int length);

struct SpectralResult {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Largest eigenvalue of the walk operator Mf(x) = (1/2m) sum f(x a_i^{±1})
/// restricted to the ball with Dirichlet (killed) boundary: a guaranteed,
/// radius-monotone lower bound for the spectral radius (2m)^{theta-1}.
/// Power iteration on M+I (the ball graph may be bipartite) with a
/// Rayleigh-quotient convergence test.
SpectralResult spectral_radius_lower_bound(const CayleyBall& ball, int max_iterations = 10000,
                                           double tolerance = 1e-10);

struct MonteCarloResult {
  double estimate = 0.0;
  double ci_low = 0.0, ci_high = 0.0;  // 95% Wilson score interval
  long long hits = 0, trials = 0;
};

/// Frequency estimate of the return probability |W_l|/(2m)^l.
MonteCarloResult monte_carlo_return(const TrivialityOracle& oracle, int m, int length,
                                    long long trials, Rng& rng);

}  // namespace cglab
