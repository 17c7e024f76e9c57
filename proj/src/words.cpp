#include "cglab/words.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cglab {

Word::Word(std::initializer_list<int> letters) {
  data_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0 || x > 127 || x < -127) throw std::invalid_argument("letter out of range");
    data_.push_back(static_cast<char>(x));
  }
}

Word Word::parse(std::string_view text) {
  Word w;
  for (char c : text) {
    if (c >= 'a' && c <= 'z')
      w.push(static_cast<Letter>(c - 'a' + 1));
    else if (c >= 'A' && c <= 'Z')
      w.push(static_cast<Letter>(-(c - 'A' + 1)));
    else
      throw std::invalid_argument(std::string("bad letter character: ") + c);
  }
  return w;
}

std::string Word::str() const {
  std::string s;
  s.reserve(size());
  for (std::size_t i = 0; i < size(); i++) {
    Letter x = (*this)[i];
    int idx = letter_index(x);
    if (idx > 26) throw std::invalid_argument("generator index beyond z");
    s.push_back(x > 0 ? static_cast<char>('a' + idx - 1) : static_cast<char>('A' + idx - 1));
  }
  return s;
}

int Word::max_index() const {
  int m = 0;
  for (std::size_t i = 0; i < size(); i++) m = std::max(m, letter_index((*this)[i]));
  return m;
}

bool Word::is_reduced() const {
  for (std::size_t i = 0; i + 1 < size(); i++)
    if ((*this)[i] == -(*this)[i + 1]) return false;
  return true;
}

bool Word::is_cyclically_reduced() const {
  if (!is_reduced()) return false;
  if (size() >= 2 && front() == -back()) return false;
  return true;
}

Word reduce(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); i++) {
    Letter x = w[i];
    if (!out.empty() && out.back() == -x)
      out.pop();
    else
      out.push(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  for (std::size_t i = w.size(); i-- > 0;) out.push(static_cast<Letter>(-w[i]));
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  for (std::size_t i = 0; i < v.size(); i++) out.push(v[i]);
  return out;
}

Word rotated(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word out;
  for (std::size_t i = 0; i < w.size(); i++) out.push(w[(i + k) % w.size()]);
  return out;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  std::size_t lo = 0, hi = r.size();
  Word conj;
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    conj.push(r[lo]);
    lo++;
    hi--;
  }
  Word core;
  for (std::size_t i = lo; i < hi; i++) core.push(r[i]);
  return {core, conj};
}

Word sample_plain_word(int m, int len, Rng& rng) {
  if (m < 1 || len < 0) throw std::invalid_argument("sample_plain_word: need m >= 1, len >= 0");
  Word w;
  for (int i = 0; i < len; i++) {
    auto k = rng.below(static_cast<std::uint64_t>(2 * m));
    int idx = static_cast<int>(k) / 2 + 1;
    w.push(static_cast<Letter>((k % 2) == 0 ? idx : -idx));
  }
  return w;
}

Word sample_reduced_word(int m, int len, Rng& rng) {
  if (m < 2 || len < 1) throw std::invalid_argument("sample_reduced_word: need m >= 2, len >= 1");
  Word w;
  auto k = rng.below(static_cast<std::uint64_t>(2 * m));
  int idx = static_cast<int>(k) / 2 + 1;
  w.push(static_cast<Letter>((k % 2) == 0 ? idx : -idx));
  for (int i = 1; i < len; i++) {
    Letter banned = static_cast<Letter>(-w.back());
    // uniform among the 2m-1 letters != banned
    auto r = rng.below(static_cast<std::uint64_t>(2 * m - 1));
    int count = -1;
    Letter chosen = 0;
    for (int j = 0; j < 2 * m && chosen == 0; j++) {
      int id = j / 2 + 1;
      Letter x = static_cast<Letter>((j % 2) == 0 ? id : -id);
      if (x == banned) continue;
      if (++count == static_cast<int>(r)) chosen = x;
    }
    w.push(chosen);
  }
  return w;
}

}  // namespace cglab
