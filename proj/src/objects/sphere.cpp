#include "cga/objects/sphere.hpp"

#include <cmath>

#include "cga/core/basis.hpp"
#include "cga/core/error.hpp"
#include "components.hpp"

namespace cga {
namespace {

Multivector nb_factor(const Multivector &v4) {
  return grade_select(-((v4 ^ basis::n) * basis::minkowski), 3);
}

} // namespace

Sphere Sphere::from_multivector(const Multivector &mv, double tol) {
  if (!mv.is_finite() || !is_homogeneous(mv, 4, tol))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "sphere must be a finite 4-vector");
  const Multivector v = grade_select(mv, 4);
  if (!(norm(v ^ basis::n) > tol * norm(v) * norm(basis::n)))
    throw GeometryError(ErrorKind::DegenerateSphere,
                        "V4 ^ n = 0, the 4-vector is a plane");
  return Sphere(v);
}

Sphere sphere_through(const ConformalPoint &p1, const ConformalPoint &p2,
                      const ConformalPoint &p3, const ConformalPoint &p4,
                      double tol) {
  const Multivector v4 = ((p1.mv() ^ p2.mv()) ^ p3.mv()) ^ p4.mv();
  if (norm(nb_factor(v4)) <=
      tol * detail::norm_product({&p1.mv(), &p2.mv(), &p3.mv(), &p4.mv()}))
    throw GeometryError(ErrorKind::DegenerateSphere,
                        "points are coplanar (i_s = 0)");
  return Sphere::from_multivector(v4, tol);
}

Multivector sphere_pseudoscalar(const Sphere &sphere) {
  return nb_factor(sphere.mv());
}

SphereData sphere_data(const Sphere &sphere, double tol) {
  const Multivector &v4 = sphere.mv();
  const Multivector v4n = v4 ^ basis::n;
  if (!(norm(v4n) > tol * norm(v4) * norm(basis::n)))
    throw GeometryError(ErrorKind::DegenerateSphere, "V4 ^ n vanishes");

  const double r_sq = scalar_product(v4, v4) / scalar_product(v4n, v4n);
  const Multivector centre = grade_select(
      0.5 * r_sq * basis::n + v4 * blade_inverse(-v4n, tol), 1);
  const EuclidVector c = extract_point(centre, tol);
  const double scale = 1.0 + dot(c, c);
  if (r_sq < -tol * scale)
    throw GeometryError(ErrorKind::ImaginarySphere, "r^2 < 0");
  const double r = std::sqrt(std::max(r_sq, 0.0));

  return SphereData{
      c, ConformalPoint::from_multivector(centre, tol), r,
      nb_factor(v4)[kE1 | kE2 | kE3]};
}

Sphere sphere_from_center_radius(const ConformalPoint &center, double r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw GeometryError(ErrorKind::InvalidArgument, "radius must be > 0");
  return Sphere::from_multivector((center.mv() - 0.5 * r * r * basis::n) *
                                  basis::i3d * basis::minkowski);
}

} // namespace cga
