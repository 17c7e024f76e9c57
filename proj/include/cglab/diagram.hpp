#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cglab/errors.hpp"
#include "cglab/presentation.hpp"
#include "cglab/words.hpp"

namespace cglab {

/// Tag of an internal face: the face's boundary word, read along the face
/// orbit starting at the tag's anchor half-edge, must equal
/// rotated(relator, rotation) for orientation +1, or
/// rotated(inverse(relator), rotation) for orientation -1.
struct FaceTag {
  int relator = 0;
  int rotation = 0;
  int orientation = +1;
};

/// Van Kampen diagram as a combinatorial map on half-edges.
///
/// mate is a fixed-point-free involution pairing the two sides of each edge;
/// next gives the counterclockwise successor around the origin vertex
/// (vertices are the orbits of next); label(mate(h)) = label(h)^{-1}.
/// Faces are the orbits of h -> next(mate(h)); the rotation system fixes the
/// planar embedding and Euler's formula V - E + F = 2 certifies planarity.
///
/// The boundary is traversed by h -> prev(mate(h)) (prev = inverse of next),
/// reading label(h) at each step; boundary_anchor starts the traversal. The
/// outer face, as a face orbit, consists of the mates of the boundary
/// traversal.
struct Diagram {
  std::vector<std::int32_t> mate;
  std::vector<std::int32_t> next;
  std::vector<Letter> label;
  std::map<std::int32_t, FaceTag> face_tags;  // anchor half-edge -> tag
  std::int32_t boundary_anchor = -1;          // -1 only for the empty diagram

  std::size_t half_edge_count() const { return mate.size(); }
  bool empty() const { return mate.empty(); }
};

/// Faces as orbits of next(mate(.)), ordered by smallest member half-edge.
struct FaceStructure {
  std::vector<std::vector<std::int32_t>> cycles;
  std::vector<std::int32_t> face_of;  // half-edge -> face index
  int outer = -1;                     // face containing mate(boundary_anchor)
};

FaceStructure compute_faces(const Diagram& d);

struct VerifyReport {
  bool ok = false;
  bool structural_violation = false;
  std::string violation;      // empty when ok
  std::int32_t face_anchor = -1;  // offending tag anchor for label mismatches
};

/// Structural invariants first (involution, permutation, label coherence,
/// connectivity, Euler), then the face tagging: every face except the outer
/// one carries exactly one tag whose expected relator word matches exactly.
VerifyReport verify_diagram(const Diagram& d, const Presentation& p);

/// Word read along the boundary traversal from the anchor; length |dD|.
Word boundary_word(const Diagram& d);

/// min-rotation canonical form, for up-to-rotation comparisons of boundaries.
Word canonical_rotation(const Word& w);

struct ComponentSummary {
  int faces = 0;
  int boundary_length = 0;
  int area = 0;
};

struct DiagramMetrics {
  int boundary_length = 0;
  int face_count = 0;
  int area = 0;  // sum of internal face degrees
  int internal_edges = 0;
  int external_edges = 0;  // edges with exactly one side on an internal face
  int filament_edges = 0;  // edges with no side on an internal face
  std::vector<ComponentSummary> components;
};

/// Computes all metrics and checks A(D) = external + 2*internal edges as an
/// internal identity.
DiagramMetrics metrics(const Diagram& d);

struct FilamentDecomposition {
  std::vector<Diagram> components;  // maximal connected non-filamenteous parts
  std::vector<std::vector<std::int32_t>> filaments;  // clusters of filament edges
                                                     // (smaller half-edge ids)
};

/// Filaments are the edges bounding no internal face; removing them splits
/// the diagram into non-filamenteous components, rebuilt as diagrams with
/// their tags carried over. |dD| = sum |dD_i| + 2 * filament_edge_count.
FilamentDecomposition filament_decomposition(const Diagram& d);

/// One face bounded by the given relator occurrence; boundary reads the word.
Diagram one_face_diagram(const Word& relator_form, FaceTag tag);

/// Pure filament path: boundary w . w^{-1}, no faces, area 0.
Diagram filament_path_diagram(const Word& w);

/// Any freely trivial word is the boundary of a filament tree (0 faces).
/// Throws std::invalid_argument if w does not reduce to the empty word.
Diagram trivial_word_diagram(const Word& w);

}  // namespace cglab
