#pragma once

#include "cga/core/multivector.hpp"
#include "cga/objects/euclid.hpp"
#include "cga/objects/point.hpp"

namespace cga {

// Grade-4 representative P1 ^ P2 ^ P3 ^ n = d Ip n - Ip N.
class Plane {
public:
  // Requires grade 4 and mv ^ n = 0 (InvalidArgument otherwise).
  static Plane from_multivector(const Multivector &mv,
                                double tol = kDefaultTolerance);

  const Multivector &mv() const noexcept { return mv_; }

private:
  explicit Plane(const Multivector &mv) : mv_(mv) {}
  Multivector mv_;
};

// Ip is the orientation bivector; d the perpendicular vector from the
// origin to the plane.
struct PlaneData {
  EuclidBivector Ip;
  EuclidVector d;
};

// Throws DegeneratePlane for collinear points.
Plane plane_through(const ConformalPoint &p1, const ConformalPoint &p2,
                    const ConformalPoint &p3, double tol = kDefaultTolerance);

// Ip = -(V n) |_ nb, d = (V ^ nb) Ip^-1 N. Throws DegeneratePlane.
PlaneData plane_data(const Plane &plane, double tol = kDefaultTolerance);

// C ^ Ic ^ n = (c ^ Ic) n - Ic N; reduces to -Ic N when the origin lies in
// the plane. Throws InvalidArgument for a vanishing Ic.
Plane plane_alt_param(const ConformalPoint &point, const EuclidBivector &Ic,
                      double tol = kDefaultTolerance);

} // namespace cga
