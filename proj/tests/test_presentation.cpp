#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cglab/presentation.hpp"

using namespace cglab;

namespace {
Presentation make(int m, std::initializer_list<Word> rels) {
  Presentation p;
  p.generator_count = m;
  p.relators = rels;
  p.validate();
  return p;
}
const Word kCommutator{1, 2, -1, -2};                      // abAB
const Word kGenus2{1, 2, -1, -2, 3, 4, -3, -4};            // abABcdCD
}  // namespace

TEST_CASE("density relator counts") {
  DensityConfig c0{2, 0.0, 10, WordKind::reduced};
  CHECK(c0.relator_count() == 1);  // (2m)^0
  DensityConfig c1{2, 0.5, 12, WordKind::reduced};
  CHECK(c1.relator_count() == 729);  // 3^6
  DensityConfig c2{2, 0.3, 10, WordKind::reduced};
  CHECK(c2.relator_count() == 27);  // round(3^3)
  DensityConfig c3{2, 0.5, 12, WordKind::plain};
  CHECK(c3.relator_count() == 4096);  // 4^6
}

TEST_CASE("sampler: counts, reducedness, budget error") {
  Rng rng(5);
  DensityConfig cfg{2, 0.3, 10, WordKind::reduced};
  SampleInfo info;
  Presentation p = sample_density_presentation(cfg, rng, 1000000, &info);
  CHECK(p.relators.size() == 27);
  CHECK(info.requested == 27);
  for (auto& r : p.relators) {
    CHECK(r.is_cyclically_reduced());
    CHECK(r.size() <= 10);
  }
  DensityConfig big{2, 1.0, 60, WordKind::plain};
  CHECK_THROWS_AS(sample_density_presentation(big, rng), BudgetError);
}

TEST_CASE("plain-word relators that reduce away are dropped but recorded") {
  Rng rng(41);
  DensityConfig cfg{2, 1.0, 2, WordKind::plain};  // 16 words of length 2; 4 are x x^{-1}
  SampleInfo info;
  Presentation p = sample_density_presentation(cfg, rng, 1000, &info);
  CHECK(info.requested == 16);
  CHECK(info.dropped_trivial > 0);
  CHECK(p.relators.size() + static_cast<std::size_t>(info.dropped_trivial) == 16);
  for (auto& r : p.relators) CHECK(!r.empty());
}

TEST_CASE("symmetrize") {
  auto s = symmetrize(make(2, {kCommutator}));
  CHECK(s.size() == 8);  // 4 rotations x 2 orientations, all distinct
  for (auto& w : s) CHECK(w.is_cyclically_reduced());
  auto s2 = symmetrize(make(1, {Word{1, 1}}));
  CHECK(s2.size() == 2);  // aa and AA
  Presentation empty;
  empty.generator_count = 2;
  CHECK(symmetrize(empty).empty());
  // size bound: <= 2 sum |r_i|
  auto s3 = symmetrize(make(4, {kGenus2, kCommutator}));
  CHECK(s3.size() <= 2 * (8 + 4));
}

TEST_CASE("max_piece on fixtures") {
  CHECK(max_piece(make(2, {kCommutator})).max_piece_length == 1);
  CHECK(max_piece(make(4, {kGenus2})).max_piece_length == 1);
  // two copies of the same relator share the full word
  CHECK(max_piece(make(2, {kCommutator, kCommutator})).max_piece_length == 4);
  // witness places are distinct
  auto rep = max_piece(make(2, {kCommutator, kCommutator}));
  bool distinct = rep.witness[0].relator != rep.witness[1].relator ||
                  rep.witness[0].orientation != rep.witness[1].orientation ||
                  rep.witness[0].position != rep.witness[1].position;
  CHECK(distinct);
}

TEST_CASE("max_piece invariance under rotation, inversion, permutation") {
  Rng rng(17);
  for (int trial = 0; trial < 30; trial++) {
    DensityConfig cfg{2, 0.2, 9, WordKind::reduced};
    Presentation p = sample_density_presentation(cfg, rng);
    if (p.relators.empty()) continue;
    int base_val = max_piece(p).max_piece_length;
    Presentation q = p;
    q.relators[0] = rotated(q.relators[0], 1 + rng.below(q.relators[0].size()));
    std::swap(q.relators.front(), q.relators.back());
    CHECK(max_piece(q).max_piece_length == base_val);
    Presentation r = p;
    r.relators[0] = inverse(r.relators[0]);
    CHECK(max_piece(r).max_piece_length == base_val);
  }
}

TEST_CASE("check_small_cancellation strictness") {
  // genus-2 surface: max piece 1 < 8/6
  CHECK(check_small_cancellation(make(4, {kGenus2}), Ratio{1, 6}).satisfied);
  // commutator: piece 1, 1 < 4 * (1/4) fails strictly
  CHECK_FALSE(check_small_cancellation(make(2, {kCommutator}), Ratio{1, 4}).satisfied);
  // no relators: vacuous
  Presentation empty;
  empty.generator_count = 2;
  CHECK(check_small_cancellation(empty, Ratio{1, 6}).satisfied);
}

TEST_CASE("piece histogram counts maximal pieces") {
  auto rep = max_piece(make(2, {kCommutator}));
  // every single letter occurs twice in the symmetrized closure, and no
  // 2-letter piece exists: all four length-1 pieces are maximal
  CHECK(rep.piece_length_histogram.at(1) == 4);
  CHECK(rep.piece_length_histogram.count(2) == 0);
}

TEST_CASE("density heuristic: mean max-piece ratio decreasing in relator length") {
  // the mean of max_piece/l approaches 2d from above as l grows
  Rng rng(23);
  double prev = 2.0;
  for (int l : {8, 12, 16, 20}) {
    DensityConfig cfg{2, 0.3, l, WordKind::reduced};
    double mean = 0;
    const int seeds = 12;
    for (int s = 0; s < seeds; s++) {
      Rng sub = rng.substream(static_cast<std::uint64_t>(l * 100 + s));
      Presentation p = sample_density_presentation(cfg, sub);
      mean += static_cast<double>(max_piece(p).max_piece_length) / l;
    }
    mean /= seeds;
    CHECK(mean <= prev + 0.05);  // monotone trend, small statistical slack
    prev = mean;
    CHECK(mean >= 2 * 0.3 - 0.1);  // never collapses below the heuristic line
  }
}
