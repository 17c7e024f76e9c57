#include "cglab/locality.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cglab {

namespace {

double log_mpz(const mpz_class& v) {
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

// LHS of the defining inequality for B.
double b_lhs(double B, double C, int m, double eta) {
  double alpha = alpha_of(C);
  return 4.0 * alpha * std::log(B / C) + 6.0 + std::log(B) / (eta * std::log(2.0 * m - 1.0));
}

}  // namespace

double alpha_of(double C) {
  if (!(C > 0.0 && C <= 1.0)) throw std::domain_error("alpha_of: C must lie in (0,1]");
  if (C == 1.0) return 0.0;
  return 1.0 / std::log(1.0 / (1.0 - C));
}

double min_B(double C, int m, double eta) {
  if (!(C > 0.0 && C <= 1.0)) throw std::domain_error("min_B: C must lie in (0,1]");
  if (m < 2) throw std::domain_error("min_B: m >= 2");
  if (!(eta >= 0.5)) throw std::domain_error("min_B: eta >= 1/2");
  double witness = 144.0 / (C * C);
  if (b_lhs(witness, C, m, eta) > witness)
    throw std::logic_error("min_B: the sufficiency witness B = 144/C^2 failed its inequality");
  // f(B) = lhs - B is concave with f(1) >= 5 > 0: single downward crossing
  double lo = 1.0, hi = witness;
  for (int it = 0; it < 200; it++) {
    double mid = 0.5 * (lo + hi);
    if (b_lhs(mid, C, m, eta) <= mid)
      hi = mid;
    else
      lo = mid;
    if ((hi - lo) / hi < 1e-9) break;
  }
  return hi;
}

LocalityFactor locality_factor(double C, double A, int m, double eta) {
  LocalityFactor f;
  f.B = min_B(C, m, eta);
  if (!(A >= std::max(f.B, 1.0)))
    throw HypothesisError("locality_factor: need A >= max(B, 1) = " +
                          std::to_string(std::max(f.B, 1.0)) + ", got A = " + std::to_string(A));
  double r = 2.0 * std::sqrt(f.B / A);
  double q = std::sqrt(0.75);
  double log_product = 0.0;
  double term = r;
  while (term > 1e-18) {
    log_product += std::log1p(term);
    term *= q;
  }
  f.product_factor = std::exp(log_product);
  f.exp_bound = std::exp(200.0 / (C * std::sqrt(A)));
  if (f.product_factor > f.exp_bound)
    throw std::logic_error("locality_factor: product exceeded exp(200/(C sqrt(A)))");
  return f;
}

LocalityCertificate certify_upper_bound(const CountTable& counts, double C, int lambda,
                                        double A, int m) {
  if (lambda < 1) throw std::domain_error("certify_upper_bound: lambda >= 1");
  if (!(A > 1.0)) throw std::domain_error("certify_upper_bound: A > 1");
  LocalityCertificate cert;
  cert.C = C;
  cert.A = A;
  cert.m = m;
  cert.lambda = lambda;
  cert.base = counts.base;
  // outward rounding: hypothesis checked on a superset of [A lambda/4, A lambda]
  cert.window_lo = std::max(1, static_cast<int>(std::floor(A * lambda / 4.0)));
  cert.window_hi = static_cast<int>(std::ceil(A * lambda));
  if (counts.exact_up_to < cert.window_hi)
    throw IncompleteWindowError("window [" + std::to_string(cert.window_lo) + ", " +
                                std::to_string(cert.window_hi) + "] exceeds exact counts (up to " +
                                std::to_string(counts.exact_up_to) + ")");
  double logbase = std::log(static_cast<double>(counts.base));
  double eta_w = -std::numeric_limits<double>::infinity();
  for (int l = cert.window_lo; l <= cert.window_hi; l++) {
    const mpz_class& c = counts.counts[static_cast<std::size_t>(l)];
    if (c <= 0) continue;  // zero counts satisfy any exponent hypothesis
    eta_w = std::max(eta_w, log_mpz(c) / (logbase * l));
  }
  cert.eta_window = std::max(0.5, eta_w);  // hypothesis needs eta >= 1/2
  LocalityFactor f = locality_factor(C, A, m, cert.eta_window);
  cert.B = f.B;
  cert.factor = f.product_factor;
  cert.exp_bound = f.exp_bound;
  cert.certified_exponent = cert.eta_window * cert.factor;
  cert.table_fingerprint = counts.fingerprint();
  std::ostringstream cond;
  cond << "for all l >= " << cert.window_lo << ", |W_l| <= " << counts.base << "^("
       << cert.certified_exponent << " l), conditional on |dD| >= " << C
       << " A(D) holding for all minimal diagrams of the presentation";
  cert.conditionality = cond.str();
  return cert;
}

std::vector<QuasimultRow> quasimultiplicativity_gap(const CountTable& counts, double C,
                                                    int lambda) {
  if (lambda < 1) throw std::domain_error("quasimultiplicativity_gap: lambda >= 1");
  if (!(C > 0.0 && C <= 1.0)) throw std::domain_error("quasimultiplicativity_gap: C in (0,1]");
  // precondition: superadditivity of the table itself
  for (int a = 1; a <= counts.exact_up_to; a++) {
    for (int b = a; a + b <= counts.exact_up_to; b++) {
      int shift = counts.kind == WordKind::reduced ? 2 : 0;
      if (a + b + shift > counts.exact_up_to) continue;
      if (counts.counts[static_cast<std::size_t>(a + b + shift)] <
          counts.counts[static_cast<std::size_t>(a)] * counts.counts[static_cast<std::size_t>(b)])
        throw std::invalid_argument("quasimultiplicativity_gap: table violates superadditivity at (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  double alpha = alpha_of(C);
  double logbase = std::log(static_cast<double>(counts.base));
  std::vector<QuasimultRow> rows;
  bool any_coverage = false;
  for (int l = 4; l <= counts.exact_up_to; l++) {
    const mpz_class& lhs = counts.counts[static_cast<std::size_t>(l)];
    if (lhs <= 0) continue;
    if (static_cast<double>(l) <= C * lambda) continue;  // log term undefined
    int inflate = static_cast<int>(
        std::ceil(2.0 * alpha * lambda * std::log(static_cast<double>(l) / (C * lambda)) +
                  3.0 * lambda));
    int lo = (l + 3) / 4, hi = 3 * l / 4;
    mpz_class best = 0;
    bool covered = false;
    for (int lp = lo; lp <= hi; lp++) {
      // parity slack: allow one extra unit on each inflated index
      for (int da = 0; da <= 1; da++) {
        for (int db = 0; db <= 1; db++) {
          int a = lp + inflate + da, b = l - lp + inflate + db;
          if (a > counts.exact_up_to || b > counts.exact_up_to) continue;
          covered = true;
          mpz_class prod =
              counts.counts[static_cast<std::size_t>(a)] * counts.counts[static_cast<std::size_t>(b)];
          if (prod > best) best = prod;
        }
      }
    }
    if (!covered) break;  // longer l only inflate further
    any_coverage = true;
    QuasimultRow row;
    row.length = l;
    row.lhs_log = log_mpz(lhs) / logbase;
    mpz_class rhs = best * (l / lambda > 0 ? l / lambda : 1);
    row.rhs_log = rhs > 0 ? log_mpz(rhs) / logbase : -std::numeric_limits<double>::infinity();
    row.slack = row.rhs_log - row.lhs_log;
    rows.push_back(row);
  }
  if (!any_coverage)
    throw CoverageError("quasimultiplicativity_gap: inflated lengths exceed table coverage");
  return rows;
}

double heuristic_density_iso_constant(double density, double cartan_hadamard_scale) {
  if (!(density >= 0.0 && density < 0.5))
    throw std::domain_error("heuristic iso constant defined for d < 1/2");
  if (!(cartan_hadamard_scale >= 1.0))
    throw std::domain_error("cartan_hadamard_scale >= 1");
  return (0.5 - density) / cartan_hadamard_scale;
}

}  // namespace cglab
