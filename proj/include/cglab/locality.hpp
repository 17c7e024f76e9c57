#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cglab/counting.hpp"
#include "cglab/errors.hpp"

namespace cglab {

/// alpha = 1/log(1/(1-C)) for 0 < C < 1, alpha = 0 at C = 1; always <= 1/C.
double alpha_of(double C);

/// Smallest B >= 1 with 4 alpha log(B/C) + 6 + (1/eta) log_{2m-1} B <= B,
/// by bisection to relative tolerance 1e-9. B = 144/C^2 always suffices and
/// is verified as an internal cross-check.
double min_B(double C, int m, double eta);

struct LocalityFactor {
  double product_factor = 1.0;  // prod_{i>=0} (1 + 2 sqrt(B/A) (3/4)^{i/2})
  double exp_bound = 1.0;       // exp(200 / (C sqrt(A)))
  double B = 0.0;
};

/// Requires A >= max(B, 1): the induction extending the window bound needs
/// the hypothesis to hold at scale A >= B, otherwise HypothesisError.
/// product_factor <= exp_bound is asserted.
LocalityFactor locality_factor(double C, double A, int m, double eta);

/// Certified global exponent bound from exhaustive counts on a finite window.
/// Conditional on C being a true isoperimetric constant (|dD| >= C A(D) for
/// minimal diagrams) for the presentation behind the counts.
struct LocalityCertificate {
  int window_lo = 0, window_hi = 0;  // outward-rounded [A lambda/4, A lambda]
  double eta_window = 0.5;           // max over window of (1/l) log_base |W_l|, >= 1/2
  double factor = 1.0;
  double exp_bound = 1.0;
  double certified_exponent = 0.5;  // eta_window * factor
  double C = 0.0, A = 0.0, B = 0.0;
  int m = 0, lambda = 0;
  int base = 0;
  std::string method = "product";
  std::uint64_t table_fingerprint = 0;
  /// Semantics: for every l >= window_lo, |W_l| <= base^{certified * l},
  /// conditional on the supplied C.
  std::string conditionality;
};

/// Both bases are supported through the table's kind (2m-1 for reduced/eta,
/// 2m for plain/theta). Window endpoints round outward so the hypothesis is
/// checked on a superset. Throws IncompleteWindowError when the table does
/// not cover the window exactly, HypothesisError when A < B.
LocalityCertificate certify_upper_bound(const CountTable& counts, double C, int lambda,
                                        double A, int m);

/// Per-length diagnostic for the quasimultiplicativity corollary:
///   |W_l| <= (l/lambda) max_{l/4 <= l' <= 3l/4} |W_{l'+D}| |W_{l-l'+D}|,
///   D = 2 alpha lambda log(l/(C lambda)) + 3 lambda  (rounded up; a parity
///   slack of one unit is allowed on each inflated index).
/// slack = log_base(rhs) - log_base(lhs); negative slack flags (counts, C)
/// incompatibility. Requires the table to satisfy superadditivity first.
struct QuasimultRow {
  int length = 0;
  double lhs_log = 0.0;  // log_base |W_l|
  double rhs_log = 0.0;
  double slack = 0.0;
};

std::vector<QuasimultRow> quasimultiplicativity_gap(const CountTable& counts, double C,
                                                    int lambda);

/// Heuristic helper, clearly labeled: C ~ (1/2 - d) / cartan_hadamard_scale
/// for random presentations at density d. Not a proof of hyperbolicity.
double heuristic_density_iso_constant(double density, double cartan_hadamard_scale = 1.0);

}  // namespace cglab
