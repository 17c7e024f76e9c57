#include "cglab/exponents.hpp"

#include <cmath>
#include <limits>

#include "cglab/locality.hpp"

namespace cglab {

namespace {

double log_mpz(const mpz_class& v) {
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

bool table_has_odd_entries(const CountTable& t) {
  for (int l = 1; l <= t.exact_up_to; l += 2)
    if (t.counts[static_cast<std::size_t>(l)] > 0) return true;
  return false;
}

}  // namespace

ExponentBound theta_lower_bound(const CountTable& plain) {
  bool odd = table_has_odd_entries(plain);
  ExponentBound best;
  best.raw = -std::numeric_limits<double>::infinity();
  double logbase = std::log(static_cast<double>(plain.base));
  for (int l = 1; l <= plain.exact_up_to; l++) {
    if (!odd && l % 2 == 1) continue;
    const mpz_class& c = plain.counts[static_cast<std::size_t>(l)];
    if (c <= 0) continue;
    double v = log_mpz(c) / (logbase * l);
    if (v > best.raw) {
      best.raw = v;
      best.best_length = l;
    }
  }
  if (best.best_length == 0)
    throw UndefinedEstimateError("theta_lower_bound: all counts at l >= 1 are zero");
  best.value = best.raw;
  return best;
}

ExponentBound eta_lower_bound(const CountTable& reduced) {
  bool odd = table_has_odd_entries(reduced);
  ExponentBound best;
  best.raw = -std::numeric_limits<double>::infinity();
  double logbase = std::log(static_cast<double>(reduced.base));
  for (int l = 1; l <= reduced.exact_up_to; l++) {
    if (!odd && l % 2 == 1) continue;
    const mpz_class& c = reduced.counts[static_cast<std::size_t>(l)];
    if (c <= 0) continue;
    double v = (log_mpz(c) / logbase - 2.0) / l;
    if (v > best.raw) {
      best.raw = v;
      best.best_length = l;
    }
  }
  if (best.best_length == 0) {
    // empty kernel: the free-group convention eta = 1/2
    best.empty_kernel = true;
    best.value = 0.5;
    best.raw = std::numeric_limits<double>::quiet_NaN();
    return best;
  }
  best.value = std::max(0.5, best.raw);
  return best;
}

double grigorchuk_theta_from_eta(double eta, int m) {
  if (m < 2) throw std::domain_error("grigorchuk: m >= 2");
  if (!(eta >= 0.5 - 1e-12 && eta <= 1.0 + 1e-12))
    throw std::domain_error("grigorchuk: eta must lie in [1/2, 1]");
  double q = 2.0 * m - 1.0;
  return std::log(std::pow(q, eta) + std::pow(q, 1.0 - eta)) / std::log(2.0 * m);
}

double free_group_theta(int m) {
  return std::log(2.0 * std::sqrt(2.0 * m - 1.0)) / std::log(2.0 * m);
}

double grigorchuk_eta_from_theta(double theta, int m) {
  if (m < 2) throw std::domain_error("grigorchuk: m >= 2");
  double lo = free_group_theta(m);
  if (theta < lo - 1e-9)
    throw NoSolutionError("theta below the free-group value log_2m(2 sqrt(2m-1))");
  if (theta > 1.0 + 1e-12) throw std::domain_error("grigorchuk: theta must be <= 1");
  double q = 2.0 * m - 1.0;
  double X = std::pow(2.0 * m, theta);
  double disc = X * X - 4.0 * q;
  if (disc < 0.0) disc = 0.0;  // theta within tolerance of the free value
  double x = (X + std::sqrt(disc)) / 2.0;  // branch with eta >= 1/2
  return std::log(x) / std::log(q);
}

ExponentEstimate estimate_from_table(const CountTable& table) {
  ExponentEstimate est;
  est.base = table.base;
  est.kind = table.kind == WordKind::reduced ? ExponentKind::eta : ExponentKind::theta;
  if (table.kind == WordKind::reduced) {
    ExponentBound b = eta_lower_bound(table);
    est.lower_bound = b.value;
    est.raw_lower = b.raw;
    est.empty_kernel = b.empty_kernel;
  } else {
    ExponentBound b = theta_lower_bound(table);
    est.lower_bound = b.value;
    est.raw_lower = b.raw;
  }
  // two-point slope over the two largest usable positive counts
  bool odd = table_has_odd_entries(table);
  int l2 = 0, l1 = 0;
  for (int l = table.exact_up_to; l >= 1; l--) {
    if (!odd && l % 2 == 1) continue;
    if (table.counts[static_cast<std::size_t>(l)] <= 0) continue;
    if (l2 == 0)
      l2 = l;
    else {
      l1 = l;
      break;
    }
  }
  if (l1 > 0) {
    double logbase = std::log(static_cast<double>(table.base));
    double slope = (log_mpz(table.counts[static_cast<std::size_t>(l2)]) -
                    log_mpz(table.counts[static_cast<std::size_t>(l1)])) /
                   (logbase * (l2 - l1));
    est.point_estimate = est.kind == ExponentKind::eta ? std::max(0.5, slope) : slope;
    est.window_lo = l1;
    est.window_hi = l2;
  } else {
    est.point_estimate = est.lower_bound;
    est.window_lo = est.window_hi = l2;
  }
  return est;
}

EstimatePair estimate_exponents(const Presentation& p, const TrivialityOracle& oracle,
                                int max_radius, std::size_t budget,
                                std::optional<double> iso_constant) {
  CayleyBall ball = build_ball(oracle, p.generator_count, max_radius, budget, OnBudget::truncate);
  CountTable plain = count_table(ball, WordKind::plain);
  CountTable reduced = count_table(ball, WordKind::reduced);
  EstimatePair pair;
  pair.ball_radius = ball.radius;
  pair.ball_size = ball.size();
  pair.plain_fingerprint = plain.fingerprint();
  pair.reduced_fingerprint = reduced.fingerprint();
  pair.theta = estimate_from_table(plain);
  pair.eta = estimate_from_table(reduced);
  if (iso_constant) {
    int lambda = std::max(1, p.max_relator_length());
    double A = static_cast<double>(plain.exact_up_to) / lambda;
    for (auto* side : {&pair.eta, &pair.theta}) {
      const CountTable& t = side->kind == ExponentKind::eta ? reduced : plain;
      try {
        side->certified_upper =
            certify_upper_bound(t, *iso_constant, lambda, A, p.generator_count)
                .certified_exponent;
      } catch (const HypothesisError&) {
        // window scale too small for the constants; certificate honestly refused
      } catch (const IncompleteWindowError&) {
      }
    }
  }
  return pair;
}

}  // namespace cglab
