#include "map_builder.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cglab::detail {

namespace {

std::size_t ring_pos(const std::vector<std::int32_t>& ring, std::int32_t h) {
  for (std::size_t i = 0; i < ring.size(); i++)
    if (ring[i] == h) return i;
  throw std::logic_error("half-edge missing from its ring");
}

void ring_insert_after(std::vector<std::int32_t>& ring, std::int32_t after, std::int32_t h) {
  ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(ring_pos(ring, after)) + 1, h);
}

void ring_insert_before(std::vector<std::int32_t>& ring, std::int32_t before, std::int32_t h) {
  ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(ring_pos(ring, before)), h);
}

void ring_remove(std::vector<std::int32_t>& ring, std::int32_t h) {
  ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(ring_pos(ring, h)));
}

}  // namespace

MapBuilder MapBuilder::face_loop(const Word& form, FaceTag tag) {
  MapBuilder b;
  auto n = static_cast<int>(form.size());
  if (n == 0) throw std::invalid_argument("face_loop: empty relator form");
  for (int i = 0; i < n; i++) b.new_vertex();
  for (int i = 0; i < n; i++)
    b.add_edge(i, (i + 1) % n, form[static_cast<std::size_t>(i)]);
  b.base = 0;
  b.anchor = 0;  // half-edge of the first loop edge
  b.tags.emplace(0, tag);
  return b;
}

MapBuilder MapBuilder::edge_path(const Word& w) {
  MapBuilder b;
  b.base = b.new_vertex();
  if (w.empty()) return b;
  int prev = b.base;
  for (std::size_t i = 0; i < w.size(); i++) {
    int v = b.new_vertex();
    std::int32_t h = b.add_edge(prev, v, w[i]);
    if (i == 0) b.anchor = h;
    prev = v;
  }
  return b;
}

MapBuilder MapBuilder::trivial_tree(const Word& w) {
  if (w.empty()) {
    MapBuilder b;
    b.base = b.new_vertex();
    return b;
  }
  // find an adjacent cancelling pair, build the rest, reinsert a pendant
  std::size_t i = 0;
  while (i + 1 < w.size() && w[i] != -w[i + 1]) i++;
  if (i + 1 >= w.size()) throw std::invalid_argument("trivial_tree: word is not freely trivial");
  Word rest;
  for (std::size_t k = 0; k < w.size(); k++)
    if (k != i && k != i + 1) rest.push(w[k]);
  MapBuilder b = trivial_tree(rest);
  if (i == 0) {
    // pendant becomes the first boundary edge: new anchor
    int leaf = b.new_vertex();
    std::int32_t h = b.add_edge(b.base, leaf, w[0]);
    auto& ring0 = b.ring[static_cast<std::size_t>(b.base)];
    ring_remove(ring0, h);
    if (b.anchor >= 0)
      ring_insert_after(ring0, b.anchor, h);
    else
      ring0.push_back(h);
    b.anchor = h;
    return b;
  }
  // locate the (i-1)-th boundary step of the sub-tree and hang the pendant
  std::vector<std::int32_t> t = b.boundary();
  assert(t.size() >= i);
  std::int32_t attach_after = t[i - 1];
  int v = b.origin[static_cast<std::size_t>(b.mate[static_cast<std::size_t>(attach_after)])];
  int leaf = b.new_vertex();
  std::int32_t h = b.add_edge(v, leaf, w[i]);
  auto& ringv = b.ring[static_cast<std::size_t>(v)];
  ring_remove(ringv, h);
  ring_insert_before(ringv, b.mate[static_cast<std::size_t>(attach_after)], h);
  return b;
}

void MapBuilder::wrap(Letter x) {
  int old_base = base;
  int new_base = new_vertex();
  std::int32_t h = add_edge(new_base, old_base, x);
  auto& ring_old = ring[static_cast<std::size_t>(old_base)];
  ring_remove(ring_old, mate[static_cast<std::size_t>(h)]);
  if (anchor >= 0)
    ring_insert_after(ring_old, anchor, mate[static_cast<std::size_t>(h)]);
  else
    ring_old.push_back(mate[static_cast<std::size_t>(h)]);
  anchor = h;
  base = new_base;
}

void MapBuilder::concat(MapBuilder&& other) {
  if (other.anchor < 0) return;  // nothing to append
  if (anchor < 0 && mate.empty()) {
    // this is a bare vertex: adopt other wholesale
    std::int32_t keep_base = base;
    *this = std::move(other);
    (void)keep_base;
    return;
  }
  auto hoff = static_cast<std::int32_t>(mate.size());
  auto voff = static_cast<int>(ring.size());
  for (std::size_t h = 0; h < other.mate.size(); h++) {
    mate.push_back(other.mate[h] + hoff);
    origin.push_back(other.origin[h] == other.base
                         ? base
                         : other.origin[h] + voff);
    label.push_back(other.label[h]);
    dead.push_back(other.dead[h]);
  }
  for (std::size_t v = 0; v < other.ring.size(); v++) {
    if (static_cast<int>(v) == other.base) {
      ring.emplace_back();  // keep vertex numbering aligned; left empty
      continue;
    }
    std::vector<std::int32_t> r;
    r.reserve(other.ring[v].size());
    for (auto h : other.ring[v]) r.push_back(h + hoff);
    ring.push_back(std::move(r));
  }
  for (const auto& [a, tag] : other.tags) tags.emplace(a + hoff, tag);
  // merged base ring: [a1] ++ (ring2 from a2's successor, ending at a2)
  //                        ++ (ring1 from a1's successor, a1 excluded)
  const auto& r2 = other.ring[static_cast<std::size_t>(other.base)];
  std::vector<std::int32_t>& r1 = ring[static_cast<std::size_t>(base)];
  std::vector<std::int32_t> merged;
  merged.push_back(anchor);
  {
    std::size_t apos2 = ring_pos(r2, other.anchor);
    for (std::size_t i = 1; i <= r2.size(); i++)
      merged.push_back(r2[(apos2 + i) % r2.size()] + hoff);
  }
  {
    std::size_t apos = ring_pos(r1, anchor);
    for (std::size_t i = 1; i < r1.size(); i++) merged.push_back(r1[(apos + i) % r1.size()]);
  }
  r1 = std::move(merged);
}

std::vector<std::int32_t> MapBuilder::boundary() const {
  std::vector<std::int32_t> t;
  if (anchor < 0) return t;
  std::int32_t h = anchor;
  do {
    t.push_back(h);
    std::int32_t mh = mate[static_cast<std::size_t>(h)];
    const auto& r = ring[static_cast<std::size_t>(origin[static_cast<std::size_t>(mh)])];
    std::size_t pos = ring_pos(r, mh);
    h = r[(pos + r.size() - 1) % r.size()];
  } while (h != anchor && t.size() <= mate.size());
  if (h != anchor) throw std::logic_error("boundary traversal failed to close");
  return t;
}

Word MapBuilder::boundary_word() const {
  Word w;
  for (auto h : boundary()) w.push(label[static_cast<std::size_t>(h)]);
  return w;
}

void MapBuilder::fold_junction(int left, int count) {
  if (count == 0) return;
  std::vector<std::int32_t> t = boundary();
  assert(left >= count + 1);
  assert(static_cast<std::size_t>(left + count) <= t.size());
  for (int i = 0; i < count; i++) {
    std::int32_t a = t[static_cast<std::size_t>(left - 1 - i)];
    std::int32_t b = t[static_cast<std::size_t>(left + i)];
    assert(label[static_cast<std::size_t>(b)] == -label[static_cast<std::size_t>(a)]);
    assert(a != anchor && b != anchor);
    std::int32_t ma = mate[static_cast<std::size_t>(a)];
    std::int32_t mb = mate[static_cast<std::size_t>(b)];
    if (b == ma) {
      // pendant return: prune the edge entirely
      int v = origin[static_cast<std::size_t>(ma)];
      assert(ring[static_cast<std::size_t>(v)].size() == 1);
      ring[static_cast<std::size_t>(v)].clear();
      ring_remove(ring[static_cast<std::size_t>(origin[static_cast<std::size_t>(a)])], a);
      dead[static_cast<std::size_t>(a)] = dead[static_cast<std::size_t>(b)] = true;
      continue;
    }
    int u = origin[static_cast<std::size_t>(a)];
    int v = origin[static_cast<std::size_t>(b)];
    assert(origin[static_cast<std::size_t>(ma)] == v);
    int w = origin[static_cast<std::size_t>(mb)];
    // drop b at v (it merges with ma)
    ring_remove(ring[static_cast<std::size_t>(v)], b);
    // move w's remaining fan to u, wedged right after a
    auto& ringw = ring[static_cast<std::size_t>(w)];
    std::size_t bpos = ring_pos(ringw, mb);
    std::vector<std::int32_t> fan;
    for (std::size_t k = 1; k < ringw.size(); k++)
      fan.push_back(ringw[(bpos + k) % ringw.size()]);
    if (w == u) {
      ring_remove(ringw, mb);
    } else {
      ringw.clear();
      auto& ringu = ring[static_cast<std::size_t>(u)];
      std::size_t apos = ring_pos(ringu, a);
      ringu.insert(ringu.begin() + static_cast<std::ptrdiff_t>(apos) + 1, fan.begin(), fan.end());
      for (auto h : fan) origin[static_cast<std::size_t>(h)] = u;
    }
    // re-anchor any tags living on the dead half-edges
    auto move_tag = [this](std::int32_t from, std::int32_t to) {
      auto it = tags.find(from);
      if (it != tags.end()) {
        tags.emplace(to, it->second);
        tags.erase(it);
      }
    };
    move_tag(b, ma);
    move_tag(mb, a);
    dead[static_cast<std::size_t>(b)] = dead[static_cast<std::size_t>(mb)] = true;
  }
}

Diagram MapBuilder::finalize() && {
  Diagram d;
  std::vector<std::int32_t> remap(mate.size(), -1);
  std::int32_t alive = 0;
  for (std::size_t h = 0; h < mate.size(); h++)
    if (!dead[h]) remap[h] = alive++;
  d.mate.assign(static_cast<std::size_t>(alive), -1);
  d.next.assign(static_cast<std::size_t>(alive), -1);
  d.label.assign(static_cast<std::size_t>(alive), 0);
  for (std::size_t h = 0; h < mate.size(); h++) {
    if (dead[h]) continue;
    auto nh = static_cast<std::size_t>(remap[h]);
    d.mate[nh] = remap[static_cast<std::size_t>(mate[h])];
    d.label[nh] = label[h];
  }
  for (const auto& r : ring) {
    for (std::size_t i = 0; i < r.size(); i++) {
      assert(!dead[static_cast<std::size_t>(r[i])]);
      d.next[static_cast<std::size_t>(remap[static_cast<std::size_t>(r[i])])] =
          remap[static_cast<std::size_t>(r[(i + 1) % r.size()])];
    }
  }
  for (const auto& [a, tag] : tags) {
    assert(!dead[static_cast<std::size_t>(a)]);
    d.face_tags.emplace(remap[static_cast<std::size_t>(a)], tag);
  }
  d.boundary_anchor = anchor >= 0 ? remap[static_cast<std::size_t>(anchor)] : -1;
  return d;
}

}  // namespace cglab::detail
