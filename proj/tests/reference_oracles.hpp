// Independent reference computations for tests. Nothing here touches the
// CayleyBall/CountTable implementation path: the tree counts use a radial
// distance-class DP, the Z^2 counts closed forms and a coordinate DP, and the
// brute-force counters enumerate words directly against an oracle.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "cglab/oracle.hpp"
#include "cglab/words.hpp"

namespace refor {

// Closed-walk count |W_l| on the 2m-regular tree (free group F_m): radial DP
// over distance classes. From the root there are 2m ways out; from distance
// k >= 1 one way down and 2m-1 ways up.
inline mpz_class free_tree_walk_count(int m, int length) {
  int R = length / 2 + 1;
  std::vector<mpz_class> cur(static_cast<std::size_t>(R) + 2, 0), nxt(cur);
  cur[0] = 1;
  for (int t = 1; t <= length; t++) {
    for (auto& v : nxt) v = 0;
    for (int k = 0; k <= R; k++) {
      if (cur[static_cast<std::size_t>(k)] == 0) continue;
      if (k == 0)
        nxt[1] += 2 * m * cur[0];
      else {
        nxt[static_cast<std::size_t>(k - 1)] += cur[static_cast<std::size_t>(k)];
        if (k + 1 <= R + 1) nxt[static_cast<std::size_t>(k + 1)] += (2 * m - 1) * cur[static_cast<std::size_t>(k)];
      }
    }
    std::swap(cur, nxt);
  }
  return cur[0];
}

inline mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// |W_{2n}| on Z^2 is C(2n,n)^2.
inline mpz_class z2_walk_count(int length) {
  if (length % 2 == 1) return 0;
  mpz_class c = binomial(static_cast<unsigned>(length), static_cast<unsigned>(length / 2));
  return c * c;
}

// Reduced trivial words on Z^2: DP over (x, y, last move), forbidding the
// immediate inverse move.
inline mpz_class z2_reduced_count(int length) {
  if (length == 0) return 1;
  int B = length + 1;
  int side = 2 * B + 1;
  auto at = [side, B](std::vector<mpz_class>& v, int x, int y, int d) -> mpz_class& {
    return v[((static_cast<std::size_t>(x + B) * static_cast<std::size_t>(side)) +
              static_cast<std::size_t>(y + B)) *
                 4 +
             static_cast<std::size_t>(d)];
  };
  const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
  auto inv = [](int d) { return d ^ 1; };
  std::vector<mpz_class> cur(static_cast<std::size_t>(side) * side * 4, 0), nxt(cur);
  for (int d = 0; d < 4; d++) at(cur, dx[d], dy[d], d) = 1;
  for (int t = 2; t <= length; t++) {
    for (auto& v : nxt) v = 0;
    for (int x = -B; x <= B; x++)
      for (int y = -B; y <= B; y++)
        for (int d = 0; d < 4; d++) {
          const mpz_class& c = at(cur, x, y, d);
          if (c == 0) continue;
          for (int d2 = 0; d2 < 4; d2++) {
            if (d2 == inv(d)) continue;
            int x2 = x + dx[d2], y2 = y + dy[d2];
            if (std::abs(x2) + std::abs(y2) > B) continue;
            at(nxt, x2, y2, d2) += c;
          }
        }
    std::swap(cur, nxt);
  }
  mpz_class total = 0;
  for (int d = 0; d < 4; d++) total += at(cur, 0, 0, d);
  return total;
}

// Brute force |W_l|: enumerate all (2m)^l words against the oracle.
inline mpz_class brute_force_trivial_count(const cglab::TrivialityOracle& oracle, int m,
                                           int length) {
  mpz_class count = 0;
  std::vector<int> digits(static_cast<std::size_t>(length), 0);
  auto letter_of = [m](int k) {
    int idx = k / 2 + 1;
    return static_cast<cglab::Letter>((k % 2) == 0 ? idx : -idx);
  };
  while (true) {
    cglab::Word w;
    for (int i = 0; i < length; i++) w.push(letter_of(digits[static_cast<std::size_t>(i)]));
    if (oracle.is_trivial(w)) count++;
    int pos = 0;
    while (pos < length && ++digits[static_cast<std::size_t>(pos)] == 2 * m) {
      digits[static_cast<std::size_t>(pos)] = 0;
      pos++;
    }
    if (pos == length) break;
    if (length == 0) break;
  }
  return count;
}

// Brute force |W'_l|: enumerate reduced words only.
inline mpz_class brute_force_reduced_trivial_count(const cglab::TrivialityOracle& oracle, int m,
                                                   int length) {
  mpz_class count = 0;
  cglab::Word w;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      if (oracle.is_trivial(w)) count++;
      return;
    }
    for (int k = 0; k < 2 * m; k++) {
      int idx = k / 2 + 1;
      auto x = static_cast<cglab::Letter>((k % 2) == 0 ? idx : -idx);
      if (!w.empty() && w.back() == -x) continue;
      w.push(x);
      self(self, remaining - 1);
      w.pop();
    }
  };
  rec(rec, length);
  return count;
}

}  // namespace refor
