#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cglab/words.hpp"

namespace cglab {

/// Pluggable triviality oracle: decides whether a word equals the identity.
/// Implementations must be immutable after construction and safe for
/// concurrent queries.
///
/// Beyond is_trivial, an oracle may expose structural knowledge the ball
/// builder can exploit soundly:
///  - canonical_key: equal keys iff equal group elements (exact normal form);
///  - coarse_key: equal group elements always have equal keys (e.g. the
///    abelianization residue), a bucketing prefilter, never a decision;
///  - relation_girth: length of the shortest nonempty cyclically reduced
///    trivial word (no_relations if none exists);
///  - one_face_partners(u): all words w with |w| = |u| and u·w^{-1} exactly a
///    symmetrized relator, i.e. the one-relator-bigon partners of u.
class TrivialityOracle {
 public:
  static constexpr int no_relations = std::numeric_limits<int>::max();

  virtual ~TrivialityOracle() = default;

  virtual bool is_trivial(const Word& w) const = 0;
  virtual std::string name() const = 0;
  virtual std::string soundness_domain() const = 0;

  virtual std::optional<std::string> canonical_key(const Word&) const { return std::nullopt; }
  virtual std::optional<std::string> coarse_key(const Word&) const { return std::nullopt; }
  /// nullopt = unknown (assume relations of any length may exist).
  virtual std::optional<int> relation_girth() const { return std::nullopt; }
  /// True when every relation has even length (Cayley graph bipartite).
  virtual bool even_relations_only() const { return false; }
  virtual std::vector<Word> one_face_partners(const Word&) const { return {}; }
  /// Sound superset test: may a nonempty trivial cyclically reduced word of
  /// this length exist? Must never return false when one does.
  virtual bool trivial_length_possible(int length) const { return length >= 1; }
};

/// u = v in the group iff u·v^{-1} is trivial.
bool are_equal(const TrivialityOracle& oracle, const Word& u, const Word& v);

/// Free group F_m: trivial iff the free reduction is empty.
class FreeOracle final : public TrivialityOracle {
 public:
  explicit FreeOracle(int m);
  bool is_trivial(const Word& w) const override;
  std::string name() const override { return "free"; }
  std::string soundness_domain() const override { return "free group, exact"; }
  std::optional<std::string> canonical_key(const Word& w) const override;
  std::optional<int> relation_girth() const override { return no_relations; }
  bool even_relations_only() const override { return true; }
  bool trivial_length_possible(int) const override { return false; }

 private:
  int m_;
};

/// Free abelian group Z^m: trivial iff all generator exponent sums vanish.
class AbelianOracle final : public TrivialityOracle {
 public:
  explicit AbelianOracle(int m);
  bool is_trivial(const Word& w) const override;
  std::string name() const override { return "abelian"; }
  std::string soundness_domain() const override { return "free abelian group, exact"; }
  std::optional<std::string> canonical_key(const Word& w) const override;
  std::optional<int> relation_girth() const override { return 4; }
  bool even_relations_only() const override { return true; }
  bool trivial_length_possible(int length) const override {
    return length >= 4 && length % 2 == 0;
  }

 private:
  int m_;
};

}  // namespace cglab
