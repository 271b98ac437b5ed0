#include "cga/objects/plane.hpp"

#include "cga/core/basis.hpp"
#include "cga/core/error.hpp"
#include "components.hpp"

namespace cga {
namespace {

// -(V n) |_ nb
Multivector orientation(const Multivector &v) {
  return grade_select(-right_contraction(v * basis::n, basis::nbar), 2);
}

} // namespace

Plane Plane::from_multivector(const Multivector &mv, double tol) {
  if (!mv.is_finite() || !is_homogeneous(mv, 4, tol))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "plane must be a finite 4-vector");
  const Multivector v = grade_select(mv, 4);
  if (norm(v ^ basis::n) > tol * norm(v) * norm(basis::n))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "4-vector does not contain infinity (V ^ n != 0)");
  return Plane(v);
}

Plane plane_through(const ConformalPoint &p1, const ConformalPoint &p2,
                    const ConformalPoint &p3, double tol) {
  const Multivector v = ((p1.mv() ^ p2.mv()) ^ p3.mv()) ^ basis::n;
  if (norm(orientation(v)) <=
      tol * detail::norm_product({&p1.mv(), &p2.mv(), &p3.mv(), &basis::n}))
    throw GeometryError(ErrorKind::DegeneratePlane,
                        "points are collinear (Ip = 0)");
  return Plane::from_multivector(v, tol);
}

PlaneData plane_data(const Plane &plane, double tol) {
  const Multivector &v = plane.mv();
  const Multivector ip = orientation(v);
  if (!(norm(ip) > tol * norm(v)))
    throw GeometryError(ErrorKind::DegeneratePlane, "Ip vanishes");
  PlaneData data;
  data.Ip = euclid_bivector_part(ip);
  data.d = euclid_vector_part((v ^ basis::nbar) * blade_inverse(ip, tol) *
                              basis::minkowski);
  return data;
}

Plane plane_alt_param(const ConformalPoint &point, const EuclidBivector &Ic,
                      double tol) {
  if (!(norm(Ic) > tol))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "Ic must be a non-zero bivector");
  return Plane::from_multivector(
      (point.mv() ^ to_multivector(Ic)) ^ basis::n, tol);
}

} // namespace cga
