#include "cglab/oracle.hpp"

#include <stdexcept>

namespace cglab {

bool are_equal(const TrivialityOracle& oracle, const Word& u, const Word& v) {
  return oracle.is_trivial(reduce(concat(u, inverse(v))));
}

FreeOracle::FreeOracle(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("FreeOracle: m >= 1");
}

bool FreeOracle::is_trivial(const Word& w) const { return reduce(w).empty(); }

std::optional<std::string> FreeOracle::canonical_key(const Word& w) const {
  return reduce(w).bytes();
}

AbelianOracle::AbelianOracle(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("AbelianOracle: m >= 1");
}

bool AbelianOracle::is_trivial(const Word& w) const {
  if (w.max_index() > m_)
    throw std::invalid_argument("abelian oracle: word uses a generator beyond m");
  std::vector<long long> sums(static_cast<std::size_t>(m_), 0);
  for (std::size_t i = 0; i < w.size(); i++) {
    Letter x = w[i];
    sums[static_cast<std::size_t>(letter_index(x) - 1)] += letter_sign(x);
  }
  for (long long s : sums)
    if (s != 0) return false;
  return true;
}

std::optional<std::string> AbelianOracle::canonical_key(const Word& w) const {
  std::vector<long long> sums(static_cast<std::size_t>(m_), 0);
  for (std::size_t i = 0; i < w.size(); i++) {
    Letter x = w[i];
    sums[static_cast<std::size_t>(letter_index(x) - 1)] += letter_sign(x);
  }
  std::string key;
  key.reserve(sums.size() * sizeof(long long));
  for (long long s : sums)
    key.append(reinterpret_cast<const char*>(&s), sizeof(long long));
  return key;
}

}  // namespace cglab
