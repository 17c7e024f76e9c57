#include "cglab/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "map_builder.hpp"

namespace cglab {

FaceStructure compute_faces(const Diagram& d) {
  FaceStructure fs;
  auto n = static_cast<std::int32_t>(d.half_edge_count());
  fs.face_of.assign(static_cast<std::size_t>(n), -1);
  for (std::int32_t h0 = 0; h0 < n; h0++) {
    if (fs.face_of[static_cast<std::size_t>(h0)] >= 0) continue;
    std::vector<std::int32_t> cycle;
    std::int32_t h = h0;
    do {
      fs.face_of[static_cast<std::size_t>(h)] = static_cast<std::int32_t>(fs.cycles.size());
      cycle.push_back(h);
      h = d.next[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(h)])];
    } while (h != h0);
    fs.cycles.push_back(std::move(cycle));
  }
  if (d.boundary_anchor >= 0)
    fs.outer =
        fs.face_of[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(d.boundary_anchor)])];
  return fs;
}

namespace {

std::vector<std::int32_t> prev_of(const Diagram& d) {
  std::vector<std::int32_t> prev(d.half_edge_count(), -1);
  for (std::size_t h = 0; h < d.half_edge_count(); h++)
    prev[static_cast<std::size_t>(d.next[h])] = static_cast<std::int32_t>(h);
  return prev;
}

std::vector<std::int32_t> boundary_traversal(const Diagram& d) {
  std::vector<std::int32_t> t;
  if (d.boundary_anchor < 0) return t;
  auto prev = prev_of(d);
  std::int32_t h = d.boundary_anchor;
  do {
    t.push_back(h);
    h = prev[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(h)])];
  } while (h != d.boundary_anchor && t.size() <= 2 * d.half_edge_count());
  return t;
}

Word expected_face_word(const Presentation& p, const FaceTag& tag) {
  const Word& r = p.relators[static_cast<std::size_t>(tag.relator)];
  return tag.orientation > 0 ? rotated(r, static_cast<std::size_t>(tag.rotation))
                             : rotated(inverse(r), static_cast<std::size_t>(tag.rotation));
}

}  // namespace

VerifyReport verify_diagram(const Diagram& d, const Presentation& p) {
  VerifyReport rep;
  auto fail_structural = [&rep](const std::string& why) {
    rep.structural_violation = true;
    rep.violation = why;
    return rep;
  };
  auto n = static_cast<std::int32_t>(d.half_edge_count());
  if (d.next.size() != d.mate.size() || d.label.size() != d.mate.size())
    return fail_structural("array sizes differ");
  if (n % 2 != 0) return fail_structural("odd number of half-edges");
  if (n == 0) {
    if (!d.face_tags.empty()) return fail_structural("tags on the empty diagram");
    rep.ok = true;
    return rep;
  }
  if (d.boundary_anchor < 0 || d.boundary_anchor >= n)
    return fail_structural("boundary anchor out of range");
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (std::int32_t h = 0; h < n; h++) {
    std::int32_t mh = d.mate[static_cast<std::size_t>(h)];
    if (mh < 0 || mh >= n || mh == h) return fail_structural("mate not a fixed-point-free pairing");
    if (d.mate[static_cast<std::size_t>(mh)] != h) return fail_structural("mate not an involution");
    std::int32_t nh = d.next[static_cast<std::size_t>(h)];
    if (nh < 0 || nh >= n) return fail_structural("next out of range");
    indeg[static_cast<std::size_t>(nh)]++;
    Letter x = d.label[static_cast<std::size_t>(h)];
    if (x == 0 || letter_index(x) > p.generator_count)
      return fail_structural("label outside the generator alphabet");
    if (d.label[static_cast<std::size_t>(mh)] != -x)
      return fail_structural("mates do not carry inverse labels");
  }
  for (std::int32_t h = 0; h < n; h++)
    if (indeg[static_cast<std::size_t>(h)] != 1) return fail_structural("next not a permutation");
  // connectivity under {mate, next}
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::int32_t> stack{0};
  seen[0] = true;
  int reached = 0;
  while (!stack.empty()) {
    std::int32_t h = stack.back();
    stack.pop_back();
    reached++;
    for (std::int32_t to :
         {d.mate[static_cast<std::size_t>(h)], d.next[static_cast<std::size_t>(h)]}) {
      if (!seen[static_cast<std::size_t>(to)]) {
        seen[static_cast<std::size_t>(to)] = true;
        stack.push_back(to);
      }
    }
  }
  if (reached != n) return fail_structural("underlying graph not connected");
  // Euler formula with faces from the rotation system
  FaceStructure fs = compute_faces(d);
  int vertices = 0;
  {
    std::vector<bool> vseen(static_cast<std::size_t>(n), false);
    for (std::int32_t h = 0; h < n; h++) {
      if (vseen[static_cast<std::size_t>(h)]) continue;
      vertices++;
      std::int32_t k = h;
      do {
        vseen[static_cast<std::size_t>(k)] = true;
        k = d.next[static_cast<std::size_t>(k)];
      } while (k != h);
    }
  }
  int euler = vertices - n / 2 + static_cast<int>(fs.cycles.size());
  if (euler != 2) return fail_structural("Euler formula violated: map is not a planar disc");

  // face tags: every internal face carries exactly one matching tag
  std::vector<int> tags_per_face(fs.cycles.size(), 0);
  for (const auto& [anchor, tag] : d.face_tags) {
    if (anchor < 0 || anchor >= n) return fail_structural("tag anchor out of range");
    std::int32_t f = fs.face_of[static_cast<std::size_t>(anchor)];
    if (f == fs.outer) {
      rep.violation = "tag anchored on the outer face";
      rep.face_anchor = anchor;
      return rep;
    }
    tags_per_face[static_cast<std::size_t>(f)]++;
    if (tag.relator < 0 || tag.relator >= static_cast<int>(p.relators.size())) {
      rep.violation = "tag references an unknown relator";
      rep.face_anchor = anchor;
      return rep;
    }
    Word expected = expected_face_word(p, tag);
    Word read;
    std::int32_t h = anchor;
    do {
      read.push(d.label[static_cast<std::size_t>(h)]);
      h = d.next[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(h)])];
    } while (h != anchor);
    if (read != expected) {
      rep.violation = "face word differs from the tagged relator occurrence";
      rep.face_anchor = anchor;
      return rep;
    }
  }
  for (std::size_t f = 0; f < fs.cycles.size(); f++) {
    if (static_cast<int>(f) == fs.outer) continue;
    if (tags_per_face[f] != 1) {
      rep.violation = tags_per_face[f] == 0 ? "untagged internal face" : "doubly tagged face";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

Word boundary_word(const Diagram& d) {
  Word w;
  for (std::int32_t h : boundary_traversal(d)) w.push(d.label[static_cast<std::size_t>(h)]);
  return w;
}

Word canonical_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  for (std::size_t k = 1; k < w.size(); k++) {
    Word r = rotated(w, k);
    if (r < best) best = r;
  }
  return best;
}

DiagramMetrics metrics(const Diagram& d) {
  DiagramMetrics mm;
  if (d.empty()) return mm;
  FaceStructure fs = compute_faces(d);
  mm.boundary_length = static_cast<int>(fs.cycles[static_cast<std::size_t>(fs.outer)].size());
  mm.face_count = static_cast<int>(fs.cycles.size()) - 1;
  for (std::size_t f = 0; f < fs.cycles.size(); f++)
    if (static_cast<int>(f) != fs.outer) mm.area += static_cast<int>(fs.cycles[f].size());
  for (std::int32_t h = 0; h < static_cast<std::int32_t>(d.half_edge_count()); h++) {
    std::int32_t mh = d.mate[static_cast<std::size_t>(h)];
    if (mh < h) continue;  // one side per edge
    bool in1 = fs.face_of[static_cast<std::size_t>(h)] != fs.outer;
    bool in2 = fs.face_of[static_cast<std::size_t>(mh)] != fs.outer;
    if (in1 && in2)
      mm.internal_edges++;
    else if (in1 || in2)
      mm.external_edges++;
    else
      mm.filament_edges++;
  }
  // the homogeneous area double-counts internal sides, once external ones
  if (mm.area != mm.external_edges + 2 * mm.internal_edges)
    throw std::logic_error("metrics: area identity violated");
  FilamentDecomposition fd = filament_decomposition(d);
  for (const auto& comp : fd.components) {
    FaceStructure cfs = compute_faces(comp);
    ComponentSummary cs;
    cs.faces = static_cast<int>(cfs.cycles.size()) - 1;
    cs.boundary_length = static_cast<int>(cfs.cycles[static_cast<std::size_t>(cfs.outer)].size());
    for (std::size_t f = 0; f < cfs.cycles.size(); f++)
      if (static_cast<int>(f) != cfs.outer) cs.area += static_cast<int>(cfs.cycles[f].size());
    mm.components.push_back(cs);
  }
  return mm;
}

FilamentDecomposition filament_decomposition(const Diagram& d) {
  FilamentDecomposition out;
  if (d.empty()) return out;
  FaceStructure fs = compute_faces(d);
  auto n = static_cast<std::int32_t>(d.half_edge_count());
  auto is_filament = [&](std::int32_t h) {
    return fs.face_of[static_cast<std::size_t>(h)] == fs.outer &&
           fs.face_of[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(h)])] == fs.outer;
  };
  // vertex ids from next-orbits
  std::vector<std::int32_t> vertex_of(static_cast<std::size_t>(n), -1);
  std::int32_t vcount = 0;
  for (std::int32_t h = 0; h < n; h++) {
    if (vertex_of[static_cast<std::size_t>(h)] >= 0) continue;
    std::int32_t k = h;
    do {
      vertex_of[static_cast<std::size_t>(k)] = vcount;
      k = d.next[static_cast<std::size_t>(k)];
    } while (k != h);
    vcount++;
  }

  // filament clusters: filament edges connected through shared vertices
  {
    std::vector<std::int32_t> cluster(static_cast<std::size_t>(vcount), -1);
    std::vector<std::vector<std::int32_t>> clusters;
    for (std::int32_t h = 0; h < n; h++) {
      if (d.mate[static_cast<std::size_t>(h)] < h || !is_filament(h)) continue;
      std::int32_t u = vertex_of[static_cast<std::size_t>(h)];
      std::int32_t v = vertex_of[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(h)])];
      std::int32_t cu = cluster[static_cast<std::size_t>(u)];
      std::int32_t cv = cluster[static_cast<std::size_t>(v)];
      std::int32_t c;
      if (cu < 0 && cv < 0) {
        c = static_cast<std::int32_t>(clusters.size());
        clusters.emplace_back();
      } else if (cu >= 0 && cv >= 0 && cu != cv) {
        for (auto e : clusters[static_cast<std::size_t>(cv)])
          clusters[static_cast<std::size_t>(cu)].push_back(e);
        clusters[static_cast<std::size_t>(cv)].clear();
        for (auto& cc : cluster)
          if (cc == cv) cc = cu;
        c = cu;
      } else {
        c = cu >= 0 ? cu : cv;
      }
      cluster[static_cast<std::size_t>(u)] = c;
      cluster[static_cast<std::size_t>(v)] = c;
      clusters[static_cast<std::size_t>(c)].push_back(h);
    }
    for (auto& c : clusters)
      if (!c.empty()) out.filaments.push_back(std::move(c));
  }

  // non-filament components under {mate, restricted next}
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  bool any_kept = false;
  for (std::int32_t h = 0; h < n; h++) {
    kept[static_cast<std::size_t>(h)] = !is_filament(h);
    any_kept = any_kept || kept[static_cast<std::size_t>(h)];
  }
  if (!any_kept) return out;
  auto next_kept = [&](std::int32_t h) {
    std::int32_t k = d.next[static_cast<std::size_t>(h)];
    while (!kept[static_cast<std::size_t>(k)]) k = d.next[static_cast<std::size_t>(k)];
    return k;
  };
  std::vector<std::int32_t> comp_of(static_cast<std::size_t>(n), -1);
  for (std::int32_t h0 = 0; h0 < n; h0++) {
    if (!kept[static_cast<std::size_t>(h0)] || comp_of[static_cast<std::size_t>(h0)] >= 0) continue;
    auto cid = static_cast<std::int32_t>(out.components.size());
    std::vector<std::int32_t> members, stack{h0};
    comp_of[static_cast<std::size_t>(h0)] = cid;
    while (!stack.empty()) {
      std::int32_t h = stack.back();
      stack.pop_back();
      members.push_back(h);
      for (std::int32_t to : {d.mate[static_cast<std::size_t>(h)], next_kept(h)}) {
        if (comp_of[static_cast<std::size_t>(to)] < 0) {
          comp_of[static_cast<std::size_t>(to)] = cid;
          stack.push_back(to);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<std::int32_t> local(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < members.size(); i++)
      local[static_cast<std::size_t>(members[i])] = static_cast<std::int32_t>(i);
    Diagram comp;
    for (std::int32_t h : members) {
      comp.mate.push_back(local[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(h)])]);
      comp.next.push_back(local[static_cast<std::size_t>(next_kept(h))]);
      comp.label.push_back(d.label[static_cast<std::size_t>(h)]);
    }
    for (const auto& [anchor, tag] : d.face_tags)
      if (comp_of[static_cast<std::size_t>(anchor)] == cid)
        comp.face_tags.emplace(local[static_cast<std::size_t>(anchor)], tag);
    // boundary anchor: smallest member whose mate faced the original outer face
    for (std::int32_t h : members) {
      if (fs.face_of[static_cast<std::size_t>(d.mate[static_cast<std::size_t>(h)])] == fs.outer) {
        comp.boundary_anchor = local[static_cast<std::size_t>(h)];
        break;
      }
    }
    assert(comp.boundary_anchor >= 0);
    out.components.push_back(std::move(comp));
  }
  return out;
}

Diagram one_face_diagram(const Word& relator_form, FaceTag tag) {
  return std::move(detail::MapBuilder::face_loop(relator_form, tag)).finalize();
}

Diagram filament_path_diagram(const Word& w) {
  return std::move(detail::MapBuilder::edge_path(w)).finalize();
}

Diagram trivial_word_diagram(const Word& w) {
  if (!reduce(w).empty())
    throw std::invalid_argument("trivial_word_diagram: word is not freely trivial");
  return std::move(detail::MapBuilder::trivial_tree(w)).finalize();
}

}  // namespace cglab
