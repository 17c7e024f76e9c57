#include "cglab/diagram_search.hpp"

#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "map_builder.hpp"

namespace cglab {

namespace {

using detail::MapBuilder;

struct AnchoredForm {
  Word word;
  FaceTag tag;
};

struct Searcher {
  const Presentation& p;
  int max_faces;
  long long budget;
  long long nodes = 0;
  bool budget_hit = false;
  // forms grouped by first letter (column 0..2m-1)
  std::vector<std::vector<AnchoredForm>> forms_by_first;
  // (canonical cyclic core bytes, faces) -> known failure
  std::unordered_set<std::string> failed;

  explicit Searcher(const Presentation& pres, int k, long long b)
      : p(pres), max_faces(k), budget(b) {
    forms_by_first.resize(2 * static_cast<std::size_t>(p.generator_count));
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < p.relators.size(); i++) {
      const Word& r = p.relators[i];
      for (int orient : {+1, -1}) {
        Word base_word = orient > 0 ? r : inverse(r);
        for (std::size_t k2 = 0; k2 < r.size(); k2++) {
          Word form = rotated(base_word, k2);
          if (!seen.insert(form.bytes()).second) continue;
          FaceTag tag{static_cast<int>(i), static_cast<int>(k2), orient};
          forms_by_first[column(form.front())].push_back(AnchoredForm{std::move(form), tag});
        }
      }
    }
  }

  std::size_t column(Letter x) const {
    return x > 0 ? static_cast<std::size_t>(x - 1)
                 : static_cast<std::size_t>(p.generator_count + (-x - 1));
  }

  std::string memo_key(const Word& core, int faces) const {
    return canonical_rotation(core).bytes() + char(1) + static_cast<char>(faces);
  }

  // u: reduced linear word; returns a builder with boundary exactly u.
  std::optional<MapBuilder> solve(const Word& u, int faces) {
    if (++nodes > budget) budget_hit = true;
    if (budget_hit) return std::nullopt;
    if (u.empty()) return MapBuilder::trivial_tree(u);
    auto [core, conj] = cyclic_reduce(u);
    if (core.empty()) return MapBuilder::trivial_tree(u);
    std::string key = memo_key(core, faces);
    if (faces == 0 || failed.count(key)) return std::nullopt;

    std::optional<MapBuilder> built = solve_core(core, faces);
    if (!built) {
      if (!budget_hit) failed.insert(key);
      return std::nullopt;
    }
    for (std::size_t i = conj.size(); i-- > 0;) built->wrap(conj[i]);
    return built;
  }

  // core: cyclically reduced, nonempty; faces >= 1.
  std::optional<MapBuilder> solve_core(const Word& core, int faces) {
    // (a) a face covers the first boundary edge
    for (const AnchoredForm& af : forms_by_first[column(core.front())]) {
      const Word& f = af.word;
      // z = reduce(inverse(f[1..]) . core[1..]); core = f . z in the free group
      Word z;
      for (std::size_t k = f.size(); k-- > 1;) z.push(static_cast<Letter>(-f[k]));
      for (std::size_t k = 1; k < core.size(); k++) z.push(core[k]);
      z = reduce(z);
      auto sub = solve(z, faces - 1);
      if (sub) {
        MapBuilder face = MapBuilder::face_loop(f, af.tag);
        int left = static_cast<int>(f.size());
        auto folds = static_cast<int>((f.size() + z.size() - core.size()) / 2);
        face.concat(std::move(*sub));
        face.fold_junction(left, folds);
        return face;
      }
      if (budget_hit) return std::nullopt;
    }
    // (b) the first boundary edge is a filament: core = x s x^{-1} t
    for (std::size_t j = 2; j + 1 < core.size(); j++) {
      if (core[j] != -core.front()) continue;
      Word s, t;
      for (std::size_t k = 1; k < j; k++) s.push(core[k]);
      for (std::size_t k = j + 1; k < core.size(); k++) t.push(core[k]);
      for (int k1 = 0; k1 <= faces; k1++) {
        auto ds = solve(s, k1);
        if (!ds) {
          if (budget_hit) return std::nullopt;
          continue;
        }
        auto dt = solve(t, faces - k1);
        if (dt) {
          ds->wrap(core.front());
          ds->concat(std::move(*dt));
          return ds;
        }
        if (budget_hit) return std::nullopt;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

SearchResult search_diagram(const Presentation& p, const Word& w, int max_faces,
                            long long budget) {
  p.validate();
  if (w.max_index() > p.generator_count)
    throw std::invalid_argument("search_diagram: word uses a generator outside the presentation");
  SearchResult res;
  Word target = reduce(w);
  Searcher searcher(p, max_faces, budget);
  auto built = searcher.solve(target, max_faces);
  res.nodes = searcher.nodes;
  if (!built) {
    res.status = searcher.budget_hit ? SearchStatus::budget_exceeded : SearchStatus::none;
    return res;
  }
  Diagram d = std::move(*built).finalize();
  VerifyReport rep = verify_diagram(d, p);
  if (!rep.ok)
    throw std::logic_error("search_diagram: constructed diagram failed verification: " +
                           rep.violation);
  if (canonical_rotation(boundary_word(d)) != canonical_rotation(target))
    throw std::logic_error("search_diagram: constructed boundary differs from the target word");
  res.status = SearchStatus::found;
  res.diagram = std::move(d);
  return res;
}

}  // namespace cglab
