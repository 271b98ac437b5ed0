#pragma once

#include "cga/core/multivector.hpp"
#include "cga/objects/euclid.hpp"

namespace cga::oracle {

// Term-by-term expansion of P1 ^ P2 ^ P3 for Pk = pk + pk^2/2 n + nb:
//
//   p1^p2^p3
//   + (p1^2 p2^p3 + p2^2 p3^p1 + p3^2 p1^p2) n / 2
//   + (p2^p3 + p3^p1 + p1^p2) nb
//   + {p1 (p2^2 - p3^2) + p2 (p3^2 - p1^2) + p3 (p1^2 - p2^2)} N / 2
//
// assembled directly from null-basis coefficients (no products).
Multivector expand_v3_corrected(const EuclidVector &p1,
                                const EuclidVector &p2,
                                const EuclidVector &p3);

} // namespace cga::oracle
