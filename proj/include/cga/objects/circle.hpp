#pragma once

#include "cga/core/multivector.hpp"
#include "cga/objects/euclid.hpp"
#include "cga/objects/point.hpp"

namespace cga {

// Grade-3 representative P1 ^ P2 ^ P3 with V3 ^ n != 0.
class Circle {
public:
  // InvalidArgument unless grade 3; DegenerateCircle when V3 ^ n vanishes
  // (the trivector is a line).
  static Circle from_multivector(const Multivector &mv,
                                 double tol = kDefaultTolerance);

  const Multivector &mv() const noexcept { return mv_; }

private:
  explicit Circle(const Multivector &mv) : mv_(mv) {}
  Multivector mv_;
};

// Ic carries the scale of the representative it was read from; c, c_par,
// c_perp and r are scale free. c_par lies in the plane direction of Ic and
// c_perp is orthogonal to it.
struct CircleData {
  EuclidBivector Ic;
  EuclidVector c;
  EuclidVector c_par;
  EuclidVector c_perp;
  double r = 0.0;
};

// Throws DegenerateCircle for collinear (or coincident) points.
Circle circle_through(const ConformalPoint &p1, const ConformalPoint &p2,
                      const ConformalPoint &p3,
                      double tol = kDefaultTolerance);

// Ic = -{[V3 + (V3 * i) i] ^ n} N
// r^2 = -V3^2 / Ic^2
// c_par = -[(V3 |_ n) |_ nb] Ic^-1,  c_perp = -(V3 * i) i Ic^-1
//
// Errors: DegenerateCircle when Ic vanishes, ImaginaryCircle for r^2 < 0.
CircleData circle_data(const Circle &circle, double tol = kDefaultTolerance);

// c ^ Ic + [(r^2 + c^2)/2 Ic - c (c _| Ic)] n + Ic nb - (c _| Ic) N.
// Throws InvalidArgument for r <= 0 or a vanishing Ic.
Circle circle_from_data(const EuclidVector &c, double r,
                        const EuclidBivector &Ic);

// C = -V3 / (Ic N) + r^2/2 n, valid when the circle plane contains the
// origin. Throws NotOriginPlane otherwise.
ConformalPoint circle_conformal_center_origin_plane(
    const Circle &circle, double tol = kDefaultTolerance);

} // namespace cga
