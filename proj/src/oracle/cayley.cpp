#include "cga/oracle/cayley.hpp"

#include <utility>

namespace cga::oracle {
namespace {

constexpr int kSquares[kDimension] = {+1, +1, +1, +1, -1};

std::vector<int> generators_of(unsigned mask) {
  std::vector<int> word;
  for (int g = 0; g < kDimension; ++g)
    if ((mask >> g) & 1u)
      word.push_back(g);
  return word;
}

CayleyEntry reduce(unsigned left, unsigned right) {
  std::vector<int> word = generators_of(left);
  for (int g : generators_of(right))
    word.push_back(g);

  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
        changed = true;
      } else if (word[k] == word[k + 1]) {
        sign *= kSquares[word[k]];
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(k),
                   word.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        changed = true;
        break;
      }
    }
  }

  unsigned blade = 0;
  for (int g : word)
    blade |= 1u << g;
  return {blade, sign};
}

} // namespace

CayleyTable reference_cayley_table() {
  CayleyTable table;
  for (unsigned a = 0; a < kBladeCount; ++a)
    for (unsigned b = 0; b < kBladeCount; ++b)
      table.entries[a][b] = reduce(a, b);
  return table;
}

std::vector<CayleyMismatch> cayley_check() {
  const CayleyTable reference = reference_cayley_table();
  std::vector<CayleyMismatch> mismatches;
  for (unsigned a = 0; a < kBladeCount; ++a) {
    for (unsigned b = 0; b < kBladeCount; ++b) {
      const CayleyEntry &want = reference.entries[a][b];
      const Multivector got = Multivector::blade(a) * Multivector::blade(b);
      const Multivector expected = Multivector::blade(want.blade, want.sign);
      if (!(got == expected))
        mismatches.push_back({a, b, want, got});
    }
  }
  return mismatches;
}

} // namespace cga::oracle
