#pragma once

#include "cga/core/multivector.hpp"
#include "cga/objects/euclid.hpp"

namespace cga {

// Normalized null vector P = p + p^2/2 n + nb.
class ConformalPoint {
public:
  // Accepts a grade-1 multivector that is null and has nb-weight
  // -(P * n) = 1, all within tol. Throws NotAPoint otherwise
  // (PointAtInfinity when the weight vanishes).
  static ConformalPoint from_multivector(const Multivector &mv,
                                         double tol = kDefaultTolerance);

  const Multivector &mv() const noexcept { return mv_; }

private:
  explicit ConformalPoint(const Multivector &mv) : mv_(mv) {}
  friend ConformalPoint embed_point(const EuclidVector &p);

  Multivector mv_;
};

// Throws InvalidArgument for non-finite input.
ConformalPoint embed_point(const EuclidVector &p);

// Position of a possibly scaled conformal point: divide by -(P * n), then
// reject off N via (P ^ N) N.
EuclidVector extract_point(const Multivector &point,
                           double tol = kDefaultTolerance);

inline EuclidVector extract_point(const ConformalPoint &point,
                                  double tol = kDefaultTolerance) {
  return extract_point(point.mv(), tol);
}

} // namespace cga
