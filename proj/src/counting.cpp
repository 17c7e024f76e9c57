#include "cglab/counting.hpp"

#include <cmath>
#include <string>

namespace cglab {

const mpz_class& CountTable::at(int length) const {
  if (length < 0 || length > exact_up_to)
    throw InsufficientRadiusError("count table covers lengths 0.." +
                                  std::to_string(exact_up_to) + ", asked " +
                                  std::to_string(length));
  return counts[static_cast<std::size_t>(length)];
}

std::uint64_t CountTable::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0x1f;
    h *= 1099511628211ULL;
  };
  mix(kind == WordKind::plain ? "plain" : "reduced");
  mix(std::to_string(base));
  for (const auto& c : counts) mix(c.get_str());
  return h;
}

CountTable count_table(const CayleyBall& ball, WordKind kind, int max_length) {
  int cap = 2 * ball.radius;
  if (max_length < 0) max_length = cap;
  if (max_length > cap)
    throw InsufficientRadiusError("ball radius " + std::to_string(ball.radius) +
                                  " certifies lengths up to " + std::to_string(cap) +
                                  ", asked " + std::to_string(max_length));
  int m = ball.generator_count;
  std::size_t n = ball.size();
  CountTable table;
  table.kind = kind;
  table.base = kind == WordKind::plain ? 2 * m : 2 * m - 1;
  table.exact_up_to = max_length;
  table.counts.assign(static_cast<std::size_t>(max_length) + 1, mpz_class(0));
  table.counts[0] = 1;  // the empty word, both kinds

  if (kind == WordKind::plain) {
    std::vector<mpz_class> cur(n, mpz_class(0)), nxt(n, mpz_class(0));
    cur[0] = 1;
    for (int t = 1; t <= max_length; t++) {
      for (auto& v : nxt) v = 0;
      for (std::size_t e = 0; e < n; e++) {
        if (cur[e] == 0) continue;
        const std::int32_t* row = &ball.adjacency[e * 2 * static_cast<std::size_t>(m)];
        for (int c = 0; c < 2 * m; c++)
          if (row[c] != CayleyBall::outside) nxt[static_cast<std::size_t>(row[c])] += cur[e];
      }
      std::swap(cur, nxt);
      table.counts[static_cast<std::size_t>(t)] = cur[0];
    }
    return table;
  }

  // reduced: states (element, last letter column), no immediate backtracking
  auto state = [m](std::size_t e, int c) { return e * 2 * static_cast<std::size_t>(m) + static_cast<std::size_t>(c); };
  auto inv_col = [m](int c) { return c < m ? c + m : c - m; };
  std::vector<mpz_class> cur(n * 2 * static_cast<std::size_t>(m), mpz_class(0));
  std::vector<mpz_class> nxt(cur.size(), mpz_class(0));
  // length-1 words
  {
    const std::int32_t* row = &ball.adjacency[0];
    for (int c = 0; c < 2 * m; c++)
      if (row[c] != CayleyBall::outside) cur[state(static_cast<std::size_t>(row[c]), c)] += 1;
  }
  if (max_length >= 1) {
    mpz_class w1 = 0;
    for (int c = 0; c < 2 * m; c++) w1 += cur[state(0, c)];
    table.counts[1] = w1;
  }
  for (int t = 2; t <= max_length; t++) {
    for (auto& v : nxt) v = 0;
    for (std::size_t e = 0; e < n; e++) {
      const std::int32_t* row = &ball.adjacency[e * 2 * static_cast<std::size_t>(m)];
      for (int c = 0; c < 2 * m; c++) {
        const mpz_class& v = cur[state(e, c)];
        if (v == 0) continue;
        int banned = inv_col(c);
        for (int c2 = 0; c2 < 2 * m; c2++) {
          if (c2 == banned || row[c2] == CayleyBall::outside) continue;
          nxt[state(static_cast<std::size_t>(row[c2]), c2)] += v;
        }
      }
    }
    std::swap(cur, nxt);
    mpz_class wl = 0;
    for (int c = 0; c < 2 * m; c++) wl += cur[state(0, c)];
    table.counts[static_cast<std::size_t>(t)] = wl;
  }
  return table;
}

mpz_class count_trivial_words(const CayleyBall& ball, int length) {
  if (length < 0) throw std::invalid_argument("negative length");
  if (2 * ball.radius < length)
    throw InsufficientRadiusError("need radius >= ceil(l/2) = " +
                                  std::to_string((length + 1) / 2));
  return count_table(ball, WordKind::plain, length).counts[static_cast<std::size_t>(length)];
}

mpz_class count_trivial_reduced_words(const CayleyBall& ball, int length) {
  if (length < 0) throw std::invalid_argument("negative length");
  if (2 * ball.radius < length)
    throw InsufficientRadiusError("need radius >= ceil(l/2) = " +
                                  std::to_string((length + 1) / 2));
  return count_table(ball, WordKind::reduced, length).counts[static_cast<std::size_t>(length)];
}

SpectralResult spectral_radius_lower_bound(const CayleyBall& ball, int max_iterations,
                                           double tolerance) {
  std::size_t n = ball.size();
  int m = ball.generator_count;
  double inv2m = 1.0 / (2.0 * m);
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), mv(n, 0.0);
  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (std::size_t e = 0; e < n; e++) {
      const std::int32_t* row = &ball.adjacency[e * 2 * static_cast<std::size_t>(m)];
      double acc = 0.0;
      for (int c = 0; c < 2 * m; c++)
        if (row[c] != CayleyBall::outside) acc += in[static_cast<std::size_t>(row[c])];
      out[e] = acc * inv2m;
    }
  };
  SpectralResult res;
  double prev = -2.0;
  for (int it = 1; it <= max_iterations; it++) {
    apply(v, mv);
    double num = 0.0, den = 0.0;
    for (std::size_t e = 0; e < n; e++) {
      num += v[e] * mv[e];
      den += v[e] * v[e];
    }
    double lambda = den > 0 ? num / den : 0.0;
    res.value = lambda;
    res.iterations = it;
    if (std::abs(lambda - prev) < tolerance) {
      res.converged = true;
      break;
    }
    prev = lambda;
    // shift by +1: the ball graph can be bipartite
    double norm = 0.0;
    for (std::size_t e = 0; e < n; e++) {
      mv[e] += v[e];
      norm += mv[e] * mv[e];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) {  // radius-0 ball: operator is identically zero
      res.value = 0.0;
      res.converged = true;
      break;
    }
    for (std::size_t e = 0; e < n; e++) v[e] = mv[e] / norm;
  }
  return res;
}

MonteCarloResult monte_carlo_return(const TrivialityOracle& oracle, int m, int length,
                                    long long trials, Rng& rng) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_return: trials >= 1");
  MonteCarloResult res;
  res.trials = trials;
  for (long long t = 0; t < trials; t++) {
    Word w = sample_plain_word(m, length, rng);
    if (oracle.is_trivial(w)) res.hits++;
  }
  double nf = static_cast<double>(trials);
  double p = static_cast<double>(res.hits) / nf;
  res.estimate = p;
  const double z = 1.959963984540054;  // 95%
  double z2 = z * z;
  double denom = 1.0 + z2 / nf;
  double center = (p + z2 / (2.0 * nf)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)) / denom;
  res.ci_low = center - half;
  res.ci_high = center + half;
  return res;
}

}  // namespace cglab
