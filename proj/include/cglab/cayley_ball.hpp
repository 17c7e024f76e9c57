#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cglab/errors.hpp"
#include "cglab/oracle.hpp"
#include "cglab/words.hpp"

namespace cglab {

/// Finite ball of a group: elements indexed by discovery order (0 = identity),
/// each stored as its first geodesic word in BFS/shortlex order, with the full
/// labeled adjacency restricted to the ball. Moves leaving the ball are
/// `outside`. Immutable once built.
struct CayleyBall {
  static constexpr std::int32_t outside = -1;

  int generator_count = 0;
  int radius = 0;
  std::vector<Word> elements;
  std::vector<std::int32_t> adjacency;     // elements.size() x 2m, row-major
  std::vector<std::int32_t> layer_offset;  // layer d = [layer_offset[d], layer_offset[d+1])

  std::size_t size() const { return elements.size(); }

  int column(Letter x) const { return x > 0 ? (x - 1) : (generator_count + (-x - 1)); }

  std::int32_t move(std::int32_t e, Letter x) const {
    return adjacency[static_cast<std::size_t>(e) * (2 * static_cast<std::size_t>(generator_count)) +
                     static_cast<std::size_t>(column(x))];
  }

  int distance(std::int32_t e) const;

  /// Follows w from the identity; nullopt if the walk ever leaves the ball.
  std::optional<std::int32_t> trace(const Word& w) const;
};

enum class OnBudget { raise, truncate };

/// Breadth-first construction over an arbitrary triviality oracle.
///
/// Deduplication, cheapest applicable first:
///   1. oracle canonical keys (exact normal forms), hash lookup;
///   2. girth pruning: at layer j with 2j < girth a coincidence would give a
///      nonempty trivial reduced word shorter than the girth, which is impossible;
///      at 2j == girth coincidences are exactly one-relator bigons, resolved
///      by the oracle's one_face_partners lookup;
///   3. otherwise are_equal scans bucketed by the oracle's coarse key, the
///      accepted O(frontier x known) desk-scale fallback.
///
/// Budget overrun either raises BudgetError (carrying the completed radius)
/// or truncates to the last fully completed radius.
CayleyBall build_ball(const TrivialityOracle& oracle, int m, int radius,
                      std::size_t max_elements = 2'000'000,
                      OnBudget on_budget = OnBudget::raise);

}  // namespace cglab
