#include "cga/objects/euclid.hpp"

#include "cga/core/basis.hpp"

namespace cga {

Multivector to_multivector(const EuclidVector &v) {
  return v.x * basis::e1 + v.y * basis::e2 + v.z * basis::e3;
}

Multivector to_multivector(const EuclidBivector &b) {
  return b.e23 * basis::e23 + b.e31 * basis::e31 + b.e12 * basis::e12;
}

EuclidVector euclid_vector_part(const Multivector &a) {
  return {a[kE1], a[kE2], a[kE3]};
}

EuclidBivector euclid_bivector_part(const Multivector &a) {
  return {a[kE2 | kE3], -a[kE1 | kE3], a[kE1 | kE2]};
}

} // namespace cga
