#include "cga/objects/circle.hpp"

#include <cmath>

#include "cga/core/basis.hpp"
#include "cga/core/error.hpp"
#include "components.hpp"

namespace cga {
namespace {

// -{[V3 + (V3 * i) i] ^ n} N: drop the Euclidean trivector, keep the nb
// factor.
Multivector plane_bivector(const Multivector &v3) {
  const Multivector no_volume =
      v3 + scalar_product(v3, basis::i3d) * basis::i3d;
  return grade_select(-((no_volume ^ basis::n) * basis::minkowski), 2);
}

} // namespace

Circle Circle::from_multivector(const Multivector &mv, double tol) {
  if (!mv.is_finite() || !is_homogeneous(mv, 3, tol))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "circle must be a finite trivector");
  const Multivector v = grade_select(mv, 3);
  if (!(norm(v ^ basis::n) > tol * norm(v) * norm(basis::n)))
    throw GeometryError(ErrorKind::DegenerateCircle,
                        "V3 ^ n = 0, the trivector is a line");
  return Circle(v);
}

Circle circle_through(const ConformalPoint &p1, const ConformalPoint &p2,
                      const ConformalPoint &p3, double tol) {
  const Multivector v3 = (p1.mv() ^ p2.mv()) ^ p3.mv();
  if (norm(plane_bivector(v3)) <=
      tol * detail::norm_product({&p1.mv(), &p2.mv(), &p3.mv()}))
    throw GeometryError(ErrorKind::DegenerateCircle,
                        "points are collinear (Ic = 0)");
  return Circle::from_multivector(v3, tol);
}

CircleData circle_data(const Circle &circle, double tol) {
  const Multivector &v3 = circle.mv();
  const Multivector ic = plane_bivector(v3);
  if (!(norm(ic) > tol * norm(v3)))
    throw GeometryError(ErrorKind::DegenerateCircle, "Ic vanishes");
  const Multivector ic_inv = blade_inverse(ic, tol);

  CircleData data;
  data.Ic = euclid_bivector_part(ic);
  data.c_par = euclid_vector_part(
      -(right_contraction(right_contraction(v3, basis::n), basis::nbar) *
        ic_inv));
  data.c_perp = euclid_vector_part(
      -(scalar_product(v3, basis::i3d) * basis::i3d * ic_inv));
  data.c = data.c_par + data.c_perp;

  const double r_sq = -scalar_product(v3, v3) / scalar_product(ic, ic);
  if (r_sq < -tol * (1.0 + dot(data.c, data.c)))
    throw GeometryError(ErrorKind::ImaginaryCircle, "r^2 < 0");
  data.r = std::sqrt(std::max(r_sq, 0.0));
  return data;
}

Circle circle_from_data(const EuclidVector &c, double r,
                        const EuclidBivector &Ic) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw GeometryError(ErrorKind::InvalidArgument, "radius must be > 0");
  if (!(norm(Ic) > kDefaultTolerance) || !is_finite(c))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "Ic must be a non-zero bivector");
  const Multivector cm = to_multivector(c);
  const Multivector ic = to_multivector(Ic);
  const Multivector c_ic = left_contraction(cm, ic);
  const Multivector v3 =
      (cm ^ ic) +
      (0.5 * (r * r + dot(c, c)) * ic - cm * c_ic) * basis::n +
      ic * basis::nbar - c_ic * basis::minkowski;
  return Circle::from_multivector(v3);
}

ConformalPoint circle_conformal_center_origin_plane(const Circle &circle,
                                                    double tol) {
  const CircleData data = circle_data(circle, tol);
  const double scale = 1.0 + norm(data.c) + data.r;
  if (norm(data.c_perp) > tol * scale)
    throw GeometryError(ErrorKind::NotOriginPlane,
                        "circle plane does not contain the origin");
  const Multivector ic_n = to_multivector(data.Ic) * basis::minkowski;
  const Multivector centre =
      -(circle.mv() * blade_inverse(ic_n, tol)) +
      0.5 * data.r * data.r * basis::n;
  return ConformalPoint::from_multivector(grade_select(centre, 1), tol);
}

} // namespace cga
