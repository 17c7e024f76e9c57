// Internal mutable companion of Diagram: explicit per-vertex rotation rings
// plus ring-splicing operations (concatenation at the base vertex, conjugate
// wrap, corner folds). Construction invariant maintained throughout: the
// boundary anchor is ring(base)[0], and the boundary traversal's final
// arriving half-edge is the ring successor of the anchor.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cglab/diagram.hpp"
#include "cglab/words.hpp"

namespace cglab::detail {

struct MapBuilder {
  std::vector<std::int32_t> mate;
  std::vector<std::int32_t> origin;
  std::vector<Letter> label;
  std::vector<bool> dead;
  std::vector<std::vector<std::int32_t>> ring;  // vertex -> CCW ring
  std::map<std::int32_t, FaceTag> tags;
  std::int32_t anchor = -1;
  int base = -1;

  int new_vertex() {
    ring.emplace_back();
    return static_cast<int>(ring.size()) - 1;
  }

  // h: u -> v labeled x, appended to both rings; returns h (mate is h+1)
  std::int32_t add_edge(int u, int v, Letter x) {
    auto h = static_cast<std::int32_t>(mate.size());
    mate.push_back(h + 1);
    mate.push_back(h);
    origin.push_back(u);
    origin.push_back(v);
    label.push_back(x);
    label.push_back(static_cast<Letter>(-x));
    dead.push_back(false);
    dead.push_back(false);
    ring[static_cast<std::size_t>(u)].push_back(h);
    ring[static_cast<std::size_t>(v)].push_back(h + 1);
    return h;
  }

  // One face bounded by `form`; anchor = first boundary edge; the phi-face
  // through the anchor reads `form` exactly.
  static MapBuilder face_loop(const Word& form, FaceTag tag);
  // Path spelling w; boundary w . w^{-1}.
  static MapBuilder edge_path(const Word& w);
  // Filament tree with boundary exactly the freely trivial word w.
  static MapBuilder trivial_tree(const Word& w);

  // boundary x . u . x^{-1}
  void wrap(Letter x);
  // boundary u . v (other is consumed)
  void concat(MapBuilder&& other);
  // zip `count` cancelling corners at the junction between the first `left`
  // boundary edges and the rest (used after concat(face, rest))
  void fold_junction(int left, int count);

  std::vector<std::int32_t> boundary() const;  // traversal from anchor
  Word boundary_word() const;

  Diagram finalize() &&;
};

}  // namespace cglab::detail
