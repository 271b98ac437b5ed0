#include "cga/objects/line.hpp"

#include <cmath>

#include "cga/core/basis.hpp"
#include "cga/core/error.hpp"
#include "components.hpp"

namespace cga {

Line Line::from_multivector(const Multivector &mv, double tol) {
  if (!mv.is_finite() || !is_homogeneous(mv, 3, tol))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "line must be a finite trivector");
  const Multivector v = grade_select(mv, 3);
  if (norm(v ^ basis::n) > tol * norm(v) * norm(basis::n))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "trivector does not contain infinity (V ^ n != 0)");
  return Line(v);
}

Line line_through(const ConformalPoint &p1, const ConformalPoint &p2,
                  double tol) {
  const Multivector v = (p1.mv() ^ p2.mv()) ^ basis::n;
  if (norm(v) <= tol * detail::norm_product({&p1.mv(), &p2.mv(), &basis::n}))
    throw GeometryError(ErrorKind::DegenerateLine, "coincident points");
  return Line::from_multivector(v, tol);
}

LineData line_data(const Line &line, double tol) {
  const NullCoefficients nc = to_null_basis(line.mv());
  LineData data;
  data.d = detail::vector_component(nc, kNullInfinity | kNullOrigin);
  data.m = detail::bivector_component(nc, kNullInfinity);
  if (!(norm(data.d) > tol * norm(line.mv())))
    throw GeometryError(ErrorKind::DegenerateLine, "direction vanishes");
  return data;
}

EuclidVector line_point(const LineData &data, double alpha, double tol) {
  const Multivector d = to_multivector(data.d);
  if (!(norm(data.d) > 0.0))
    throw GeometryError(ErrorKind::DegenerateLine, "direction vanishes");
  Multivector d_inv;
  try {
    d_inv = blade_inverse(d, tol);
  } catch (const GeometryError &) {
    throw GeometryError(ErrorKind::DegenerateLine,
                        "direction is not invertible");
  }
  return euclid_vector_part((to_multivector(data.m) + alpha) * d_inv);
}

Line line_alt_param(const ConformalPoint &point, const EuclidVector &phat,
                    double two_r) {
  if (!is_finite(phat) || std::abs(norm(phat) - 1.0) > kDefaultTolerance)
    throw GeometryError(ErrorKind::InvalidArgument,
                        "phat must be a unit vector");
  if (two_r == 0.0 || !std::isfinite(two_r))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "2r must be finite and non-zero");
  return Line::from_multivector(
      two_r * ((to_multivector(phat) ^ point.mv()) ^ basis::n));
}

} // namespace cga
