#pragma once

#include "cga/core/multivector.hpp"
#include "cga/objects/euclid.hpp"
#include "cga/objects/point.hpp"

namespace cga {

// Grade-4 representative P1 ^ P2 ^ P3 ^ P4 = (C - r^2/2 n) i_s N.
class Sphere {
public:
  // InvalidArgument unless grade 4; DegenerateSphere when V4 ^ n vanishes
  // (the 4-vector is a plane).
  static Sphere from_multivector(const Multivector &mv,
                                 double tol = kDefaultTolerance);

  const Multivector &mv() const noexcept { return mv_; }

private:
  explicit Sphere(const Multivector &mv) : mv_(mv) {}
  Multivector mv_;
};

struct SphereData {
  EuclidVector c;
  ConformalPoint C;
  double r = 0.0;
  // i_s = -(V4 ^ n) N = is_scale * e1e2e3.
  double is_scale = 0.0;
};

// Throws DegenerateSphere for coplanar points.
Sphere sphere_through(const ConformalPoint &p1, const ConformalPoint &p2,
                      const ConformalPoint &p3, const ConformalPoint &p4,
                      double tol = kDefaultTolerance);

// -(V4 ^ n) N, the Euclidean pseudoscalar weight of the nb component.
Multivector sphere_pseudoscalar(const Sphere &sphere);

// r^2 = V4^2 / (V4 ^ n)^2, C = r^2/2 n + V4 / (-V4 ^ n).
// Throws ImaginarySphere for r^2 < 0.
SphereData sphere_data(const Sphere &sphere, double tol = kDefaultTolerance);

// (C - r^2/2 n) i N. Throws InvalidArgument for r <= 0.
Sphere sphere_from_center_radius(const ConformalPoint &center, double r);

} // namespace cga
