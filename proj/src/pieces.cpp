#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cglab/presentation.hpp"

namespace cglab {

namespace {

struct Place {
  int relator;
  int orientation;  // +1 or -1
  int position;
};

// Doubled letter buffers, one per (relator, orientation), so any cyclic
// subword of length <= |r| is a contiguous slice.
struct Doubled {
  std::vector<std::string> fwd, bwd;
  explicit Doubled(const Presentation& p) {
    for (const auto& r : p.relators) {
      std::string f = r.bytes();
      f += r.bytes();
      fwd.push_back(std::move(f));
      Word ri = inverse(r);
      std::string b = ri.bytes();
      b += ri.bytes();
      bwd.push_back(std::move(b));
    }
  }
  std::string slice(int rel, int orient, int pos, int len) const {
    const std::string& s = orient > 0 ? fwd[rel] : bwd[rel];
    return s.substr(static_cast<std::size_t>(pos), static_cast<std::size_t>(len));
  }
};

struct Bucket {
  Place first{};
  Place second{};
  int count = 0;  // saturates at 2
};

}  // namespace

PieceReport max_piece(const Presentation& p) {
  if (p.relators.empty()) throw std::invalid_argument("max_piece: no relators");
  Doubled dbl(p);
  int nrel = static_cast<int>(p.relators.size());
  int lambda = p.max_relator_length();

  PieceReport report;
  report.per_relator_max.assign(nrel, 0);

  // Pieces are closed under taking subwords, so scan lengths upward and stop
  // at the first empty level. prev_pieces feeds the maximal-piece histogram.
  std::unordered_set<std::string> prev_pieces;
  for (int len = 1; len <= lambda; len++) {
    std::unordered_map<std::string, Bucket> buckets;
    for (int i = 0; i < nrel; i++) {
      int n = static_cast<int>(p.relators[i].size());
      if (len > n) continue;
      for (int e : {+1, -1}) {
        for (int pos = 0; pos < n; pos++) {
          auto& b = buckets[dbl.slice(i, e, pos, len)];
          // any two loop iterations are distinct places by construction
          if (b.count == 0)
            b.first = Place{i, e, pos};
          else if (b.count == 1)
            b.second = Place{i, e, pos};
          if (b.count < 2) b.count++;
        }
      }
    }
    std::unordered_set<std::string> pieces;
    for (auto& [word, b] : buckets) {
      if (b.count < 2) continue;
      pieces.insert(word);
      report.max_piece_length = len;
      report.witness_length = len;
      report.witness = {PieceOccurrence{b.first.relator, b.first.orientation, b.first.position},
                        PieceOccurrence{b.second.relator, b.second.orientation, b.second.position}};
    }
    // attribute: a relator's max piece is the longest piece occurring on it
    if (!pieces.empty()) {
      for (int i = 0; i < nrel; i++) {
        int n = static_cast<int>(p.relators[i].size());
        if (len > n) continue;
        bool hit = false;
        for (int e : {+1, -1}) {
          for (int pos = 0; pos < n && !hit; pos++)
            if (pieces.count(dbl.slice(i, e, pos, len))) hit = true;
          if (hit) break;
        }
        if (hit) report.per_relator_max[i] = len;
      }
    }
    // histogram: previous-level pieces not extendable into this level
    if (!prev_pieces.empty()) {
      std::unordered_set<std::string> ext;
      for (const auto& w : pieces) {
        ext.insert(w.substr(0, w.size() - 1));
        ext.insert(w.substr(1));
      }
      long long maximal = 0;
      for (const auto& u : prev_pieces)
        if (!ext.count(u)) maximal++;
      if (maximal > 0) report.piece_length_histogram[len - 1] = maximal;
    }
    if (pieces.empty()) break;
    prev_pieces = std::move(pieces);
  }
  if (!prev_pieces.empty())
    report.piece_length_histogram[report.max_piece_length] =
        static_cast<long long>(prev_pieces.size());
  return report;
}

SmallCancellationResult check_small_cancellation(const Presentation& p, Ratio alpha) {
  if (alpha.num <= 0 || alpha.den <= 0 || alpha.num > alpha.den)
    throw std::domain_error("check_small_cancellation: need 0 < alpha <= 1");
  SmallCancellationResult res;
  if (p.relators.empty()) {
    res.satisfied = true;  // vacuous
    return res;
  }
  res.report = max_piece(p);
  res.satisfied = true;
  for (std::size_t i = 0; i < p.relators.size(); i++) {
    long long piece = res.report.per_relator_max[i];
    long long rlen = static_cast<long long>(p.relators[i].size());
    if (!(piece * alpha.den < alpha.num * rlen)) {
      res.satisfied = false;
      break;
    }
  }
  return res;
}

SmallCancellationResult check_small_cancellation(const Presentation& p, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("check_small_cancellation: need 0 < alpha <= 1");
  SmallCancellationResult res;
  if (p.relators.empty()) {
    res.satisfied = true;
    return res;
  }
  res.report = max_piece(p);
  res.satisfied = true;
  for (std::size_t i = 0; i < p.relators.size(); i++) {
    if (!(res.report.per_relator_max[i] < alpha * static_cast<double>(p.relators[i].size()))) {
      res.satisfied = false;
      break;
    }
  }
  return res;
}

}  // namespace cglab
