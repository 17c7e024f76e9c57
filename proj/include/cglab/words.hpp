#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cglab/rng.hpp"

namespace cglab {

/// A letter is a nonzero signed integer in {-m,..,-1, 1,..,m}; the inverse of
/// x is -x, so the cancellation test is branch-free.
using Letter = signed char;

inline Letter inverse_letter(Letter x) { return static_cast<Letter>(-x); }
inline int letter_index(Letter x) { return x > 0 ? x : -x; }
inline int letter_sign(Letter x) { return x > 0 ? 1 : -1; }

/// Word over {a_1^{±1},..,a_m^{±1}}, stored contiguously (one byte per
/// letter). Immutable by convention once handed out; all operations return
/// fresh values.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::string bytes) : data_(std::move(bytes)) {}

  /// Text encoding: generator i is the i-th lowercase ASCII letter, its
  /// inverse the uppercase one (a, A, b, B, ...). Throws std::invalid_argument
  /// on anything else.
  static Word parse(std::string_view text);
  std::string str() const;

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(data_[i]); }
  Letter front() const { return static_cast<Letter>(data_.front()); }
  Letter back() const { return static_cast<Letter>(data_.back()); }

  void push(Letter x) { data_.push_back(static_cast<char>(x)); }
  void pop() { data_.pop_back(); }

  /// Raw byte string; usable as a hash key.
  const std::string& bytes() const { return data_; }

  /// Largest generator index appearing (0 for the empty word).
  int max_index() const;

  bool is_reduced() const;
  bool is_cyclically_reduced() const;

  bool operator==(const Word& o) const { return data_ == o.data_; }
  bool operator!=(const Word& o) const { return data_ != o.data_; }
  bool operator<(const Word& o) const { return data_ < o.data_; }

 private:
  std::string data_;
};

/// Free reduction: unique reduced representative, via one stack pass.
Word reduce(const Word& w);

/// Reverse the word and invert every letter.
Word inverse(const Word& w);

Word concat(const Word& u, const Word& v);

/// Cyclic rotation: w[k..] + w[..k] (k taken mod |w|).
Word rotated(const Word& w, std::size_t k);

/// Splits reduce(w) as conjugator · core · conjugator^{-1} with core
/// cyclically reduced. Returns (core, conjugator).
std::pair<Word, Word> cyclic_reduce(const Word& w);

/// Uniform over all (2m)^len words. Deterministic given the stream state.
Word sample_plain_word(int m, int len, Rng& rng);

/// Uniform over all 2m(2m-1)^{len-1} reduced words; requires m >= 2, len >= 1.
Word sample_reduced_word(int m, int len, Rng& rng);

}  // namespace cglab

template <>
struct std::hash<cglab::Word> {
  std::size_t operator()(const cglab::Word& w) const noexcept {
    return std::hash<std::string>{}(w.bytes());
  }
};
