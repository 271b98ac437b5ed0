#pragma once

#include <optional>

#include "cga/objects/euclid.hpp"

// Classical geometry fits from elementary vector algebra and 3x3 linear
// solves. Each returns nullopt ("Degenerate") when the configuration is
// singular at the given relative conditioning threshold.
namespace cga::oracle {

struct CircumCircle {
  EuclidVector c;
  double r = 0.0;
  // Unit bivector of (p1 - p2) ^ (p2 - p3).
  EuclidBivector Ic;
};

struct CircumSphere {
  EuclidVector c;
  double r = 0.0;
};

struct SupportPlane {
  EuclidVector normal; // unit
  EuclidVector d;      // foot of the perpendicular from the origin
};

inline constexpr double kFitConditioning = 1e-9;

// Intersection of the two perpendicular bisector planes with the plane of
// the points. Degenerate when |(p2 - p1) x (p3 - p1)| is below
// conditioning * |p2 - p1| |p3 - p1|.
std::optional<CircumCircle> circumcircle(const EuclidVector &p1,
                                         const EuclidVector &p2,
                                         const EuclidVector &p3,
                                         double conditioning = kFitConditioning);

// Solves 2 (pk - p1) * x = pk^2 - p1^2 for k = 2..4.
std::optional<CircumSphere> circumsphere(const EuclidVector &p1,
                                         const EuclidVector &p2,
                                         const EuclidVector &p3,
                                         const EuclidVector &p4,
                                         double conditioning = kFitConditioning);

std::optional<SupportPlane> plane_support(const EuclidVector &p1,
                                          const EuclidVector &p2,
                                          const EuclidVector &p3,
                                          double conditioning = kFitConditioning);

} // namespace cga::oracle
