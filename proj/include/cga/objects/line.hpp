#pragma once

#include "cga/core/multivector.hpp"
#include "cga/objects/euclid.hpp"
#include "cga/objects/point.hpp"

namespace cga {

// Grade-3 representative P1 ^ P2 ^ n = m n + d N.
class Line {
public:
  // Requires grade 3 and mv ^ n = 0 (InvalidArgument otherwise).
  static Line from_multivector(const Multivector &mv,
                               double tol = kDefaultTolerance);

  const Multivector &mv() const noexcept { return mv_; }

private:
  explicit Line(const Multivector &mv) : mv_(mv) {}
  Multivector mv_;
};

// Direction d and moment m; every point x on the line has x ^ d = m.
struct LineData {
  EuclidVector d;
  EuclidBivector m;
};

// Throws DegenerateLine for coincident points.
Line line_through(const ConformalPoint &p1, const ConformalPoint &p2,
                  double tol = kDefaultTolerance);

LineData line_data(const Line &line, double tol = kDefaultTolerance);

// x = (m + alpha) d^-1.
EuclidVector line_point(const LineData &data, double alpha,
                        double tol = kDefaultTolerance);

// 2r phat ^ C ^ n = 2r { (phat ^ c) n - phat N } for any point C on the line.
Line line_alt_param(const ConformalPoint &point, const EuclidVector &phat,
                    double two_r);

} // namespace cga
