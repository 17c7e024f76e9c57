#include "cglab/presentation.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace cglab {

const char* to_string(WordKind k) { return k == WordKind::plain ? "plain" : "reduced"; }

int Presentation::max_relator_length() const {
  int lam = 0;
  for (const auto& r : relators) lam = std::max<int>(lam, static_cast<int>(r.size()));
  return lam;
}

int Presentation::min_relator_length() const {
  if (relators.empty()) return 0;
  int g = relators.front().size();
  for (const auto& r : relators) g = std::min<int>(g, static_cast<int>(r.size()));
  return g;
}

bool Presentation::has_odd_relator() const {
  for (const auto& r : relators)
    if (r.size() % 2 == 1) return true;
  return false;
}

void Presentation::validate() const {
  if (generator_count < 1) throw std::invalid_argument("presentation: generator_count < 1");
  for (const auto& r : relators) {
    if (r.empty()) throw std::invalid_argument("presentation: empty relator");
    if (!r.is_cyclically_reduced())
      throw std::invalid_argument("presentation: relator not cyclically reduced");
    if (r.max_index() > generator_count)
      throw std::invalid_argument("presentation: relator uses unknown generator");
  }
}

long long DensityConfig::relator_count() const {
  int base = kind == WordKind::plain ? 2 * generator_count : 2 * generator_count - 1;
  double v = std::pow(static_cast<double>(base), density * relator_length);
  if (v >= 9.0e18) return -1;  // overflow marker, checked by the sampler
  long long n = std::llround(v);
  return n < 1 ? 1 : n;
}

void DensityConfig::validate() const {
  if (generator_count < 2) throw std::invalid_argument("density model: need m >= 2");
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must be in [0,1]");
  if (relator_length < 1) throw std::invalid_argument("relator length must be >= 1");
}

Presentation sample_density_presentation(const DensityConfig& cfg, Rng& rng,
                                         long long relator_budget, SampleInfo* info) {
  cfg.validate();
  long long n = cfg.relator_count();
  if (n < 0 || n > relator_budget)
    throw BudgetError("relator count " + (n < 0 ? std::string("overflow") : std::to_string(n)) +
                      " exceeds budget " + std::to_string(relator_budget));
  Presentation p;
  p.generator_count = cfg.generator_count;
  p.relators.reserve(static_cast<std::size_t>(n));
  if (info) {
    info->requested = n;
    info->dropped_trivial = 0;
    info->original_lengths.clear();
  }
  for (long long i = 0; i < n; i++) {
    Word w = cfg.kind == WordKind::plain
                 ? sample_plain_word(cfg.generator_count, cfg.relator_length, rng)
                 : sample_reduced_word(cfg.generator_count, cfg.relator_length, rng);
    Word core = cyclic_reduce(w).first;
    if (info) info->original_lengths.push_back(static_cast<int>(core.size()));
    if (core.empty()) {
      if (info) info->dropped_trivial++;
      continue;  // imposes no relation
    }
    p.relators.push_back(core);
  }
  return p;
}

std::vector<Word> symmetrize(const Presentation& p) {
  std::set<Word> out;
  for (const auto& r : p.relators) {
    Word ri = inverse(r);
    for (std::size_t k = 0; k < r.size(); k++) {
      out.insert(rotated(r, k));
      out.insert(rotated(ri, k));
    }
  }
  return std::vector<Word>(out.begin(), out.end());
}

}  // namespace cglab
