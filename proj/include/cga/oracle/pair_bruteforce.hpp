#pragma once

#include "cga/core/multivector.hpp"
#include "cga/objects/euclid.hpp"
#include "cga/objects/pair.hpp"

namespace cga::oracle {

enum class PairKind { Real, Imaginary };

struct BruteForcePair {
  PairKind kind = PairKind::Imaginary;
  // Unordered; only meaningful for real pairs.
  EuclidVector a;
  EuclidVector b;
};

// Solves V2 ^ X = 0, X^2 = 0 on the carrier line of the pair: with
// X(t) = embed(x0 + t dhat), V2 ^ X(t) is quadratic in t and its roots are
// the two points. A negative discriminant means an imaginary pair.
// Throws DegeneratePair when the carrier line V2 ^ n has no direction.
BruteForcePair pair_solve_bruteforce(const PointPair &pair,
                                     double tol = kDefaultTolerance);

} // namespace cga::oracle
