#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cglab/errors.hpp"
#include "cglab/rng.hpp"
#include "cglab/words.hpp"

namespace cglab {

enum class WordKind { plain, reduced };

const char* to_string(WordKind k);

/// Group presentation <a_1..a_m | relators>. Relators form a multiset (sampled
/// duplicates are kept) and are stored cyclically reduced and nonempty.
struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;

  /// lambda: maximal relator length (0 if no relators).
  int max_relator_length() const;
  /// Length of the shortest relator (0 if none). Equals the girth bound used
  /// by the counting machinery: any nonempty cyclically reduced trivial word
  /// has length >= min symmetrized relator length = this value.
  int min_relator_length() const;
  bool has_odd_relator() const;

  void validate() const;  // throws std::invalid_argument on broken invariants
};

/// Density-model sampling configuration. The relator count is
/// round(base^{d*len}) with base 2m (plain) or 2m-1 (reduced), floored at 1.
struct DensityConfig {
  int generator_count = 2;
  double density = 0.0;
  int relator_length = 1;
  WordKind kind = WordKind::reduced;

  long long relator_count() const;
  void validate() const;
};

/// Bookkeeping from sampling: plain-word relators that freely reduce to the
/// empty word impose no relation and are dropped from the working set.
struct SampleInfo {
  long long requested = 0;
  long long dropped_trivial = 0;
  std::vector<int> original_lengths;
};

Presentation sample_density_presentation(const DensityConfig& cfg, Rng& rng,
                                         long long relator_budget = 2'000'000,
                                         SampleInfo* info = nullptr);

/// Closure of the relators under cyclic rotation and inversion, deduplicated.
std::vector<Word> symmetrize(const Presentation& p);

/// One occurrence place of a subword on a relator: multiset entry index,
/// orientation (+1 reads the relator, -1 its inverse), cyclic start position.
struct PieceOccurrence {
  int relator = -1;
  int orientation = +1;
  int position = 0;
};

/// A piece is a word occurring at two distinct places: in two distinct
/// relator entries, or twice non-identically (different orientation or
/// position) on one. Periodic self-overlaps therefore count, which is
/// conservative relative to the set-based classical definition.
struct PieceReport {
  int max_piece_length = 0;
  int witness_length = 0;
  std::array<PieceOccurrence, 2> witness{};
  /// maximal pieces by length: pieces not extendable to a longer piece on
  /// either side.
  std::map<int, long long> piece_length_histogram;
  /// per relator entry: longest piece having an occurrence on it.
  std::vector<int> per_relator_max;
};

/// Exact maximal piece length (and histogram) over the symmetrized relators.
/// Requires at least one relator.
PieceReport max_piece(const Presentation& p);

/// Exact rational alpha for strict small-cancellation comparisons.
struct Ratio {
  long long num = 1;
  long long den = 6;
};

struct SmallCancellationResult {
  bool satisfied = false;
  PieceReport report;
};

/// C'(alpha): every piece q contained in a relator r satisfies |q| < alpha|r|
/// (strict). Vacuously true with no relators.
SmallCancellationResult check_small_cancellation(const Presentation& p, Ratio alpha);
/// Convenience overload for scan diagnostics (double alpha, strict compare).
SmallCancellationResult check_small_cancellation(const Presentation& p, double alpha);

}  // namespace cglab
