#include "cglab/cayley_ball.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace cglab {

int CayleyBall::distance(std::int32_t e) const {
  int lo = 0, hi = static_cast<int>(layer_offset.size()) - 1;
  // layer d = [layer_offset[d], layer_offset[d+1])
  while (lo + 1 < hi) {
    int mid = (lo + hi) / 2;
    if (layer_offset[static_cast<std::size_t>(mid)] <= e)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::optional<std::int32_t> CayleyBall::trace(const Word& w) const {
  if (w.max_index() > generator_count)
    throw std::invalid_argument("trace: word uses a generator beyond the ball's alphabet");
  std::int32_t e = 0;
  for (std::size_t i = 0; i < w.size(); i++) {
    e = move(e, w[i]);
    if (e == outside) return std::nullopt;
  }
  return e;
}

namespace {

// How candidates of a given bigon length sum can coincide with existing
// elements: not at all, only through full one-relator bigons (resolved by
// exact partner lookup), or through anything (pairwise are_equal scans).
enum class Mode { none, partner, scan };

struct Builder {
  const TrivialityOracle& oracle;
  int m;
  int radius;
  std::size_t max_elements;
  CayleyBall ball;

  bool exact_mode = false;
  std::unordered_map<std::string, std::int32_t> exact_keys;  // canonical key -> element
  std::unordered_map<std::string, std::int32_t> word_cache;  // any resolved spelling -> element
  // coarse-key buckets for the two layers a scan can target
  std::unordered_map<std::string, std::vector<std::int32_t>> bucket_cur, bucket_next;

  int girth;
  bool has_coarse;

  Builder(const TrivialityOracle& o, int m_, int radius_, std::size_t budget)
      : oracle(o), m(m_), radius(radius_), max_elements(budget) {
    ball.generator_count = m;
    ball.radius = radius;
    girth = oracle.relation_girth().value_or(0);
    exact_mode = oracle.canonical_key(Word()).has_value();
    has_coarse = oracle.coarse_key(Word()).has_value();
  }

  Letter letter_of_column(int c) const {
    return c < m ? static_cast<Letter>(c + 1) : static_cast<Letter>(-(c - m + 1));
  }
  static int inverse_column(int c, int m) { return c < m ? c + m : c - m; }

  // A coincidence between words of total length `sum` needs a nonempty
  // trivial reduced word of some length T <= sum with T = sum (mod 2). When
  // the only feasible T is the girth itself, the bigon admits no
  // cancellation and is literally a symmetrized relator: partner lookup is
  // exact and complete. Anything deeper falls back to scanning.
  Mode mode_for_sum(int sum) const {
    bool any = false, below = false;
    for (int t = sum; t >= 1; t -= 2) {
      if (oracle.trivial_length_possible(t)) {
        any = true;
        if (t < sum) below = true;
      }
    }
    if (!any) return Mode::none;
    if (!below && girth > 0 && girth != TrivialityOracle::no_relations && sum == girth)
      return Mode::partner;
    return Mode::scan;
  }

  std::int32_t adjacency_at(std::int32_t e, int c) const {
    return ball.adjacency[static_cast<std::size_t>(e) * (2 * static_cast<std::size_t>(m)) +
                          static_cast<std::size_t>(c)];
  }
  void set_adjacency(std::int32_t e, int c, std::int32_t t) {
    auto& slot = ball.adjacency[static_cast<std::size_t>(e) * (2 * static_cast<std::size_t>(m)) +
                                static_cast<std::size_t>(c)];
    assert(slot == CayleyBall::outside || slot == t);
    slot = t;
  }
  void link(std::int32_t from, int c, std::int32_t to) {
    set_adjacency(from, c, to);
    set_adjacency(to, inverse_column(c, m), from);
  }

  void register_element(const Word& w, std::int32_t idx) {
    if (exact_mode)
      exact_keys.emplace(*oracle.canonical_key(w), idx);
    else {
      word_cache.emplace(w.bytes(), idx);
      if (has_coarse) bucket_next[*oracle.coarse_key(w)].push_back(idx);
    }
  }

  std::int32_t push_element(Word w) {
    auto idx = static_cast<std::int32_t>(ball.elements.size());
    ball.elements.push_back(std::move(w));
    ball.adjacency.resize(ball.adjacency.size() + 2 * static_cast<std::size_t>(m),
                          CayleyBall::outside);
    register_element(ball.elements.back(), idx);
    return idx;
  }

  std::optional<std::int32_t> partner_lookup(const Word& u) const {
    for (const Word& partner : oracle.one_face_partners(u)) {
      auto it = word_cache.find(partner.bytes());
      if (it != word_cache.end()) return it->second;
    }
    return std::nullopt;
  }

  std::optional<std::int32_t> scan(const Word& u, int dist, bool include_cur,
                                   bool include_next) {
    auto scan_bucket = [&](const std::unordered_map<std::string, std::vector<std::int32_t>>& b,
                           const std::string& key) -> std::optional<std::int32_t> {
      auto it = b.find(key);
      if (it == b.end()) return std::nullopt;
      for (std::int32_t cand : it->second)
        if (are_equal(oracle, u, ball.elements[static_cast<std::size_t>(cand)])) return cand;
      return std::nullopt;
    };
    if (has_coarse) {
      std::string key = *oracle.coarse_key(u);
      if (include_cur)
        if (auto hit = scan_bucket(bucket_cur, key)) return hit;
      if (include_next)
        if (auto hit = scan_bucket(bucket_next, key)) return hit;
      return std::nullopt;
    }
    if (include_cur) {
      for (std::int32_t e = ball.layer_offset[static_cast<std::size_t>(dist)];
           e < ball.layer_offset[static_cast<std::size_t>(dist) + 1]; e++)
        if (are_equal(oracle, u, ball.elements[static_cast<std::size_t>(e)])) return e;
    }
    if (include_next) {
      for (std::int32_t e = ball.layer_offset[static_cast<std::size_t>(dist) + 1];
           e < static_cast<std::int32_t>(ball.elements.size()); e++)
        if (are_equal(oracle, u, ball.elements[static_cast<std::size_t>(e)])) return e;
    }
    return std::nullopt;
  }

  // Candidate u (reduced, length dist+1, from layer dist) against existing
  // elements at layers dist (mode_cur) and dist+1 (mode_next).
  std::optional<std::int32_t> resolve(const Word& u, int dist, Mode mode_cur, Mode mode_next) {
    if (exact_mode) {
      auto it = exact_keys.find(*oracle.canonical_key(u));
      if (it != exact_keys.end()) return it->second;
      return std::nullopt;
    }
    if (mode_cur == Mode::none && mode_next == Mode::none) return std::nullopt;
    auto it = word_cache.find(u.bytes());
    if (it != word_cache.end()) return it->second;
    if (auto hit = partner_lookup(u)) return hit;
    bool scan_cur = mode_cur == Mode::scan, scan_next = mode_next == Mode::scan;
    if (scan_cur || scan_next) return scan(u, dist, scan_cur, scan_next);
    return std::nullopt;
  }

  void rebuild_cur_bucket(int dist, Mode mode_cur) {
    bucket_cur.clear();
    if (!has_coarse || exact_mode || mode_cur != Mode::scan) return;
    for (std::int32_t e = ball.layer_offset[static_cast<std::size_t>(dist)];
         e < ball.layer_offset[static_cast<std::size_t>(dist) + 1]; e++)
      bucket_cur[*oracle.coarse_key(ball.elements[static_cast<std::size_t>(e)])].push_back(e);
  }

  // Returns the completed radius (== radius unless the budget struck).
  int run() {
    ball.elements.clear();
    ball.adjacency.clear();
    ball.layer_offset = {0};
    push_element(Word());
    ball.layer_offset.push_back(1);

    for (int dist = 0; dist < radius; dist++) {
      Mode mode_cur = exact_mode ? Mode::scan : mode_for_sum(2 * dist + 1);
      Mode mode_next = exact_mode ? Mode::scan : mode_for_sum(2 * dist + 2);
      rebuild_cur_bucket(dist, mode_cur);
      bucket_next.clear();
      for (std::int32_t idx = ball.layer_offset[static_cast<std::size_t>(dist)];
           idx < ball.layer_offset[static_cast<std::size_t>(dist) + 1]; idx++) {
        for (int c = 0; c < 2 * m; c++) {
          if (adjacency_at(idx, c) != CayleyBall::outside) continue;
          Letter x = letter_of_column(c);
          Word u = ball.elements[static_cast<std::size_t>(idx)];
          u.push(x);
          u = reduce(u);
          if (auto hit = resolve(u, dist, mode_cur, mode_next)) {
            link(idx, c, *hit);
            if (!exact_mode) word_cache.emplace(u.bytes(), *hit);
            continue;
          }
          if (ball.elements.size() >= max_elements) return dist;
          link(idx, c, push_element(std::move(u)));
        }
      }
      ball.layer_offset.push_back(static_cast<std::int32_t>(ball.elements.size()));
    }

    // boundary layer: resolve same-layer edges, leave outward moves outside
    int dist = radius;
    Mode mode_cur = mode_for_sum(2 * dist + 1);
    if (mode_cur == Mode::none) return radius;
    rebuild_cur_bucket(dist, mode_cur);
    bucket_next.clear();
    for (std::int32_t idx = ball.layer_offset[static_cast<std::size_t>(dist)];
         idx < ball.layer_offset[static_cast<std::size_t>(dist) + 1]; idx++) {
      for (int c = 0; c < 2 * m; c++) {
        if (adjacency_at(idx, c) != CayleyBall::outside) continue;
        Letter x = letter_of_column(c);
        Word u = ball.elements[static_cast<std::size_t>(idx)];
        u.push(x);
        u = reduce(u);
        std::int32_t boundary_start = ball.layer_offset[static_cast<std::size_t>(dist)];
        if (exact_mode) {
          auto it = exact_keys.find(*oracle.canonical_key(u));
          if (it != exact_keys.end() && it->second >= boundary_start) link(idx, c, it->second);
          continue;
        }
        auto it = word_cache.find(u.bytes());
        if (it != word_cache.end()) {
          if (it->second >= boundary_start) link(idx, c, it->second);
          continue;
        }
        std::optional<std::int32_t> hit = partner_lookup(u);
        if (!hit && mode_cur == Mode::scan)
          hit = scan(u, dist, /*include_cur=*/true, /*include_next=*/false);
        if (hit && *hit >= boundary_start) {
          link(idx, c, *hit);
          word_cache.emplace(u.bytes(), *hit);
        }
      }
    }
    return radius;
  }
};

}  // namespace

CayleyBall build_ball(const TrivialityOracle& oracle, int m, int radius,
                      std::size_t max_elements, OnBudget on_budget) {
  if (m < 1 || radius < 0) throw std::invalid_argument("build_ball: need m >= 1, radius >= 0");
  Builder b(oracle, m, radius, max_elements);
  int completed = b.run();
  if (completed == radius) return std::move(b.ball);
  if (on_budget == OnBudget::raise)
    throw BudgetError("ball budget " + std::to_string(max_elements) +
                          " exceeded; completed radius " + std::to_string(completed),
                      completed);
  // truncate: rebuild cleanly at the completed radius
  Builder b2(oracle, m, completed, max_elements);
  int done = b2.run();
  assert(done == completed);
  (void)done;
  return std::move(b2.ball);
}

}  // namespace cglab
