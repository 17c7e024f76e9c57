#include "cglab/dehn.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace cglab {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::vector<long long> exponent_vector(const Word& w, int m) {
  std::vector<long long> v(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < w.size(); i++)
    v[static_cast<std::size_t>(letter_index(w[i]) - 1)] += letter_sign(w[i]);
  return v;
}

}  // namespace

int DehnOracle::column(Letter x) const {
  int m = presentation_.generator_count;
  return x > 0 ? (x - 1) : (m + (-x - 1));
}

DehnOracle::DehnOracle(Presentation p) : presentation_(std::move(p)) {
  presentation_.validate();
  auto sc = check_small_cancellation(presentation_, Ratio{1, 6});
  if (!sc.satisfied)
    throw UnsupportedPresentationError(
        "Dehn oracle requires C'(1/6); max piece " +
        std::to_string(sc.report.max_piece_length) + " violates it");

  // symmetrized forms with their source relator entries (per-entry closure;
  // a form occurring in two entries is kept once per entry for attribution)
  std::set<Word> seen;
  for (std::size_t i = 0; i < presentation_.relators.size(); i++) {
    const Word& r = presentation_.relators[i];
    Word ri = inverse(r);
    for (std::size_t k = 0; k < r.size(); k++) {
      for (const Word& f : {rotated(r, k), rotated(ri, k)}) {
        if (seen.insert(f).second) {
          forms_.push_back(f);
          form_source_.push_back(static_cast<std::int32_t>(i));
        }
      }
    }
  }

  girth_ = presentation_.min_relator_length();
  max_piece_ = sc.report.max_piece_length;
  relator_length_present_.assign(static_cast<std::size_t>(presentation_.max_relator_length()) + 1,
                                 false);
  for (const auto& r : presentation_.relators)
    relator_length_present_[r.size()] = true;
  even_only_ = !presentation_.has_odd_relator();

  // prefix trie
  int m = presentation_.generator_count;
  trie_.push_back(Node{std::vector<std::int32_t>(static_cast<std::size_t>(2 * m), -1), -1, -1, {}});
  for (std::size_t f = 0; f < forms_.size(); f++) {
    const Word& w = forms_[f];
    std::int32_t node = 0;
    for (std::size_t k = 0; k < w.size(); k++) {
      int c = column(w[k]);
      if (trie_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(c)] < 0) {
        trie_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(c)] =
            static_cast<std::int32_t>(trie_.size());
        trie_.push_back(
            Node{std::vector<std::int32_t>(static_cast<std::size_t>(2 * m), -1), -1, -1, {}});
      }
      node = trie_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(c)];
      Node& nd = trie_[static_cast<std::size_t>(node)];
      nd.forms_through.push_back(static_cast<std::int32_t>(f));
      int depth = static_cast<int>(k) + 1;
      int rep = static_cast<int>(w.size()) - depth;
      if (2 * depth > static_cast<int>(w.size())) {
        if (nd.best_form < 0 || rep < nd.best_replace_len ||
            (rep == nd.best_replace_len && static_cast<int>(f) < nd.best_form)) {
          nd.best_form = static_cast<std::int32_t>(f);
          nd.best_replace_len = rep;
        }
      }
    }
  }

  // Hermite staircase of the relator exponent lattice
  std::vector<std::vector<long long>> rows;
  for (const auto& r : presentation_.relators) rows.push_back(exponent_vector(r, m));
  for (int d = 0; d < m; d++) {
    while (true) {
      // find two rows with nonzero coordinate d; reduce the larger
      int a = -1, b = -1;
      for (std::size_t i = 0; i < rows.size(); i++) {
        if (rows[i][static_cast<std::size_t>(d)] == 0) continue;
        if (a < 0)
          a = static_cast<int>(i);
        else {
          b = static_cast<int>(i);
          break;
        }
      }
      if (b < 0) {
        if (a >= 0) {
          auto row = rows[static_cast<std::size_t>(a)];
          if (row[static_cast<std::size_t>(d)] < 0)
            for (auto& x : row) x = -x;
          abel_basis_.push_back(row);
          abel_pivot_.push_back(d);
          rows.erase(rows.begin() + a);
        }
        break;
      }
      auto& ra = rows[static_cast<std::size_t>(a)];
      auto& rb = rows[static_cast<std::size_t>(b)];
      if (std::llabs(ra[static_cast<std::size_t>(d)]) > std::llabs(rb[static_cast<std::size_t>(d)]))
        std::swap(ra, rb);
      long long q = floor_div(rb[static_cast<std::size_t>(d)], ra[static_cast<std::size_t>(d)]);
      for (int j = 0; j < m; j++)
        rb[static_cast<std::size_t>(j)] -= q * ra[static_cast<std::size_t>(j)];
    }
  }
}

std::pair<int, int> DehnOracle::longest_usable_match(const Word& w, std::size_t i) const {
  std::int32_t node = 0;
  int best_form = -1, best_len = 0;
  for (std::size_t k = i; k < w.size(); k++) {
    std::int32_t next = trie_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(column(w[k]))];
    if (next < 0) break;
    node = next;
    const Node& nd = trie_[static_cast<std::size_t>(node)];
    if (nd.best_form >= 0) {
      best_form = nd.best_form;
      best_len = static_cast<int>(k - i) + 1;
    }
  }
  return {best_form, best_len};
}

bool DehnOracle::is_trivial(const Word& w) const {
  return is_trivial_traced(w, nullptr);
}

bool DehnOracle::is_trivial_traced(const Word& w,
                                   const std::function<void(const DehnStep&)>& on_step) const {
  if (w.max_index() > presentation_.generator_count)
    throw std::invalid_argument("dehn: word uses a generator outside the presentation");
  Word cur = reduce(w);
  while (!cur.empty()) {
    int m_form = -1, m_len = 0, m_pos = -1;
    for (std::size_t i = 0; i < cur.size(); i++) {
      auto [f, len] = longest_usable_match(cur, i);
      if (f >= 0) {
        m_form = f;
        m_len = len;
        m_pos = static_cast<int>(i);
        break;  // leftmost
      }
    }
    if (m_form < 0) break;
    const Word& form = forms_[static_cast<std::size_t>(m_form)];
    Word next;
    for (int k = 0; k < m_pos; k++) next.push(cur[static_cast<std::size_t>(k)]);
    // matched u with form = u·v; replace u by v^{-1}
    for (std::size_t k = form.size(); k-- > static_cast<std::size_t>(m_len);)
      next.push(static_cast<Letter>(-form[k]));
    for (std::size_t k = static_cast<std::size_t>(m_pos + m_len); k < cur.size(); k++)
      next.push(cur[k]);
    Word reduced = reduce(next);
    if (on_step)
      on_step(DehnStep{static_cast<int>(cur.size()), form_source_[static_cast<std::size_t>(m_form)],
                       m_pos, static_cast<int>(reduced.size())});
    cur = std::move(reduced);
  }
  return cur.empty();
}

std::optional<std::string> DehnOracle::coarse_key(const Word& w) const {
  auto v = exponent_vector(w, presentation_.generator_count);
  for (std::size_t b = 0; b < abel_basis_.size(); b++) {
    std::size_t d = static_cast<std::size_t>(abel_pivot_[b]);
    long long pivot = abel_basis_[b][d];
    long long q = floor_div(v[d], pivot);
    if (q == 0) continue;
    for (std::size_t j = 0; j < v.size(); j++) v[j] -= q * abel_basis_[b][j];
  }
  std::string key;
  key.reserve(v.size() * sizeof(long long));
  for (long long s : v) key.append(reinterpret_cast<const char*>(&s), sizeof(long long));
  return key;
}

std::optional<int> DehnOracle::relation_girth() const {
  return forms_.empty() ? no_relations : girth_;
}

bool DehnOracle::trivial_length_possible(int length) const {
  if (forms_.empty() || length < girth_) return false;
  // one face plus filaments: a relator length plus an even stem contribution
  for (std::size_t g = 0; g < relator_length_present_.size(); g++)
    if (relator_length_present_[g] && length >= static_cast<int>(g) &&
        (length - static_cast<int>(g)) % 2 == 0)
      return true;
  // n >= 2 faces: boundary >= n*girth - 2*(interior arcs)*max_piece with at
  // most 3n-6 interior arcs (n >= 3, planar dual) or 1 (n = 2); under
  // C'(1/6) the n=2 floor is the minimum
  return length >= 2 * girth_ - 2 * max_piece_;
}

bool DehnOracle::even_relations_only() const { return even_only_; }

std::vector<Word> DehnOracle::one_face_partners(const Word& u) const {
  std::vector<Word> partners;
  if (u.empty()) return partners;
  std::int32_t node = 0;
  for (std::size_t k = 0; k < u.size(); k++) {
    std::int32_t next = trie_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(column(u[k]))];
    if (next < 0) return partners;
    node = next;
  }
  for (std::int32_t f : trie_[static_cast<std::size_t>(node)].forms_through) {
    const Word& form = forms_[static_cast<std::size_t>(f)];
    if (form.size() <= u.size()) continue;
    Word w;
    for (std::size_t k = form.size(); k-- > u.size();) w.push(static_cast<Letter>(-form[k]));
    partners.push_back(std::move(w));
  }
  return partners;
}

}  // namespace cglab
