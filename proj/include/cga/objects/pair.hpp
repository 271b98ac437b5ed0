#pragma once

#include "cga/core/multivector.hpp"
#include "cga/objects/euclid.hpp"
#include "cga/objects/point.hpp"

namespace cga {

// Grade-2 representative P1 ^ P2 of a pair of points.
class PointPair {
public:
  // Throws InvalidArgument when mv is not a pure bivector.
  static PointPair from_multivector(const Multivector &mv,
                                    double tol = kDefaultTolerance);

  const Multivector &mv() const noexcept { return mv_; }

private:
  explicit PointPair(const Multivector &mv) : mv_(mv) {}
  Multivector mv_;
};

// Components read off V2 = b - v n/2 + u ^ nb + gamma/2 N, together with
// sigma = gamma^2/2 - u*v and rho = sqrt(sigma^2 - u^2 v^2).
//
// For V2 = P1 ^ P2 this gives u = p1 - p2, v = p1^2 p2 - p2^2 p1 and
// gamma = p1^2 - p2^2.
struct PairSplitIntermediates {
  EuclidVector u;
  EuclidVector v;
  double gamma = 0.0;
  double sigma = 0.0;
  double rho = 0.0;
};

// p1 is the point with the larger norm. r is half the point distance,
// phat the unit vector from p2 to p1 and c the midpoint.
struct PairData {
  EuclidVector p1;
  EuclidVector p2;
  double r = 0.0;
  EuclidVector phat;
  EuclidVector c;
};

struct PairSplit {
  PairData data;
  PairSplitIntermediates steps;
};

// P1 ^ P2. Throws DegeneratePair for coincident points.
PointPair point_pair(const ConformalPoint &p1, const ConformalPoint &p2,
                     double tol = kDefaultTolerance);

// Recovers both points of a real pair from the components of V2.
//
// Errors: DegeneratePair when u vanishes, ImaginaryPair when
// sigma^2 - u^2 v^2 < 0 or V2^2 < 0 beyond tolerance.
PairSplit split_point_pair(const PointPair &pair,
                           double tol = kDefaultTolerance);

// The pair as a one-dimensional circle:
//   2r { phat ^ c + [(c^2 + r^2) phat - 2 (c*phat) c] n/2 + phat nb
//        + (c*phat) N }
// which equals embed(c + r phat) ^ embed(c - r phat) exactly.
// Throws InvalidArgument for r < 0 or non-unit phat.
PointPair pair_circle_form(const PairData &data);

// Origin-containing carrier (phat || c): 2r {C - r^2/2 n} phat N.
Multivector pair_form_collinear_with_origin(const PairData &data);
// Midpoint perpendicular to the pair (phat * c = 0): -2r {C + r^2/2 n} phat.
Multivector pair_form_perpendicular_midpoint(const PairData &data);

ConformalPoint conformal_midpoint(const PairData &data);

} // namespace cga
