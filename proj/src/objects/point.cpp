#include "cga/objects/point.hpp"

#include <cmath>

#include "cga/core/basis.hpp"
#include "cga/core/error.hpp"

namespace cga {
namespace {

// Grade-1 part of a finite, null, non-infinite vector and its nb-weight.
struct CheckedPoint {
  Multivector vector;
  double weight;
};

CheckedPoint check_point(const Multivector &mv, double tol) {
  if (!mv.is_finite())
    throw GeometryError(ErrorKind::NotAPoint, "non-finite coefficients");
  if (!is_homogeneous(mv, 1, tol))
    throw GeometryError(ErrorKind::NotAPoint, "not a grade-1 multivector");
  Multivector v = grade_select(mv, 1);
  const double scale = norm(v);
  const double weight = -scalar_product(v, basis::n);
  if (!(std::abs(weight) > tol * scale))
    throw GeometryError(ErrorKind::PointAtInfinity,
                        "vector has no origin component (P * n = 0)");
  if (std::abs(scalar_product(v, v)) > tol * scale * scale)
    throw GeometryError(ErrorKind::NotAPoint, "vector is not null");
  return {v, weight};
}

} // namespace

ConformalPoint ConformalPoint::from_multivector(const Multivector &mv,
                                                double tol) {
  CheckedPoint checked = check_point(mv, tol);
  if (std::abs(checked.weight - 1.0) > tol)
    throw GeometryError(ErrorKind::NotAPoint,
                        "point is not normalized (-(P * n) != 1)");
  return ConformalPoint(checked.vector);
}

ConformalPoint embed_point(const EuclidVector &p) {
  if (!is_finite(p))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "cannot embed a non-finite position");
  return ConformalPoint(to_multivector(p) + (0.5 * dot(p, p)) * basis::n +
                        basis::nbar);
}

EuclidVector extract_point(const Multivector &point, double tol) {
  CheckedPoint checked = check_point(point, tol);
  const Multivector normalized = checked.vector / checked.weight;
  return euclid_vector_part((normalized ^ basis::minkowski) *
                            basis::minkowski);
}

} // namespace cga
