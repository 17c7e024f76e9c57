#pragma once

#include <optional>

#include "cglab/diagram.hpp"
#include "cglab/presentation.hpp"

namespace cglab {

enum class SearchStatus {
  found,            // verified diagram attached; proves triviality
  none,             // search space with <= max_faces faces exhausted
  budget_exceeded,  // indeterminate: distinct from "none exists"
};

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<Diagram> diagram;
  long long nodes = 0;
};

/// Exhaustive search for a van Kampen diagram with at most max_faces internal
/// faces whose boundary word is reduce(w), up to rotation. Branches over the
/// first unmatched boundary edge: either some relator face covers it or it is
/// a filament whose partner traversal splits the word; failures are memoized
/// on the cyclic normal form. A returned diagram has been re-verified against
/// the presentation, so `found` proves triviality; `none` proves only that no
/// small diagram exists.
SearchResult search_diagram(const Presentation& p, const Word& w, int max_faces,
                            long long budget = 200000);

}  // namespace cglab
