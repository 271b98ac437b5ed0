#pragma once

#include <array>
#include <vector>

#include "cga/core/multivector.hpp"

namespace cga::oracle {

struct CayleyEntry {
  unsigned blade = 0;
  int sign = 0;

  friend bool operator==(const CayleyEntry &, const CayleyEntry &) = default;
};

struct CayleyTable {
  std::array<std::array<CayleyEntry, kBladeCount>, kBladeCount> entries{};
};

// Each product is reduced generator by generator: concatenate the two
// index words, bubble adjacent pairs into order (one sign flip per swap)
// and cancel equal neighbours with their metric square.
CayleyTable reference_cayley_table();

struct CayleyMismatch {
  unsigned left = 0;
  unsigned right = 0;
  CayleyEntry expected;
  Multivector actual;
};

// Compares the reference table with the kernel's geometric product over
// all 1024 blade pairs. Empty on success.
std::vector<CayleyMismatch> cayley_check();

} // namespace cga::oracle
