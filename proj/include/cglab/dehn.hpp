#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cglab/errors.hpp"
#include "cglab/oracle.hpp"
#include "cglab/presentation.hpp"

namespace cglab {

/// One rewriting step, for the optional trace output.
struct DehnStep {
  int len_before = 0;
  int relator = -1;  // source relator entry of the matched symmetrized form
  int offset = 0;    // match position in the current word
  int len_after = 0;
};

/// Dehn's algorithm over a verified C'(1/6) presentation: repeatedly
/// free-reduce and replace any subword matching more than half of a
/// symmetrized relator by the inverse of the complement. Sound and complete
/// under C'(1/6) (Greendlinger); construction refuses anything else.
///
/// Strategy is leftmost-longest, so traces are deterministic. Matching walks
/// a prefix trie over the symmetrized forms.
class DehnOracle final : public TrivialityOracle {
 public:
  /// Throws UnsupportedPresentationError unless check_small_cancellation
  /// (p, 1/6) holds.
  explicit DehnOracle(Presentation p);

  bool is_trivial(const Word& w) const override;
  bool is_trivial_traced(const Word& w, const std::function<void(const DehnStep&)>& on_step) const;

  std::string name() const override { return "dehn"; }
  std::string soundness_domain() const override { return "C'(1/6) presentations (verified)"; }

  std::optional<std::string> coarse_key(const Word& w) const override;
  std::optional<int> relation_girth() const override;
  bool even_relations_only() const override;
  std::vector<Word> one_face_partners(const Word& u) const override;
  /// For a C'(1/6) presentation, nonempty trivial words have length in
  /// {g_i + 2k : relator lengths g_i, k >= 0} or at least
  /// 2 girth - 2 max_piece (any >= 2-face diagram); lengths strictly between
  /// are impossible.
  bool trivial_length_possible(int length) const override;

  const Presentation& presentation() const { return presentation_; }
  const std::vector<Word>& symmetrized_forms() const { return forms_; }

 private:
  struct Node {
    std::vector<std::int32_t> child;   // 2m entries, -1 = none
    std::int32_t best_form = -1;       // usable match: depth*2 > |form|
    std::int32_t best_replace_len = -1;
    std::vector<std::int32_t> forms_through;
  };

  int column(Letter x) const;
  // longest usable match of a prefix of w[i..]; returns (form, match_len)
  std::pair<int, int> longest_usable_match(const Word& w, std::size_t i) const;

  Presentation presentation_;
  std::vector<Word> forms_;
  std::vector<std::int32_t> form_source_;  // relator entry per form
  std::vector<Node> trie_;
  int girth_ = 0;
  int max_piece_ = 0;
  std::vector<bool> relator_length_present_;
  bool even_only_ = true;
  // Hermite staircase basis of the relator exponent lattice, for coarse keys.
  std::vector<std::vector<long long>> abel_basis_;
  std::vector<int> abel_pivot_;  // pivot dimension per basis row
};

}  // namespace cglab
