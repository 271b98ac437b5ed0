#pragma once

#include <initializer_list>

#include "cga/core/basis.hpp"
#include "cga/objects/euclid.hpp"

// Readers for the Euclidean factors of null-basis components, e.g. the
// vector u in u ^ nb or the bivector m in m ^ n.
namespace cga::detail {

inline EuclidVector vector_component(const NullCoefficients &c,
                                     unsigned extra) {
  return {c[kNullE1 | extra], c[kNullE2 | extra], c[kNullE3 | extra]};
}

inline EuclidBivector bivector_component(const NullCoefficients &c,
                                         unsigned extra) {
  return {c[kNullE2 | kNullE3 | extra], -c[kNullE1 | kNullE3 | extra],
          c[kNullE1 | kNullE2 | extra]};
}

inline double norm_product(std::initializer_list<const Multivector *> mvs) {
  double product = 1.0;
  for (const Multivector *mv : mvs)
    product *= norm(*mv);
  return product;
}

} // namespace cga::detail
