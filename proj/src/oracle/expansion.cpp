#include "cga/oracle/expansion.hpp"

#include "cga/core/basis.hpp"

namespace cga::oracle {
namespace {

void put_vector(NullCoefficients &out, const EuclidVector &v, unsigned extra) {
  out[kNullE1 | extra] += v.x;
  out[kNullE2 | extra] += v.y;
  out[kNullE3 | extra] += v.z;
}

void put_bivector(NullCoefficients &out, const EuclidBivector &b,
                  unsigned extra) {
  out[kNullE2 | kNullE3 | extra] += b.e23;
  out[kNullE1 | kNullE3 | extra] -= b.e31;
  out[kNullE1 | kNullE2 | extra] += b.e12;
}

} // namespace

Multivector expand_v3_corrected(const EuclidVector &p1,
                                const EuclidVector &p2,
                                const EuclidVector &p3) {
  const double s1 = dot(p1, p1);
  const double s2 = dot(p2, p2);
  const double s3 = dot(p3, p3);
  const EuclidBivector p23 = wedge(p2, p3);
  const EuclidBivector p31 = wedge(p3, p1);
  const EuclidBivector p12 = wedge(p1, p2);

  NullCoefficients coeffs{};
  coeffs[kNullE1 | kNullE2 | kNullE3] = dot(p1, cross(p2, p3));
  put_bivector(coeffs, 0.5 * (s1 * p23 + s2 * p31 + s3 * p12), kNullInfinity);
  put_bivector(coeffs, p23 + p31 + p12, kNullOrigin);
  put_vector(coeffs,
             0.5 * ((s2 - s3) * p1 + (s3 - s1) * p2 + (s1 - s2) * p3),
             kNullInfinity | kNullOrigin);
  return from_null_basis(coeffs);
}

} // namespace cga::oracle
