#include "cga/objects/pair.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "cga/core/basis.hpp"
#include "cga/core/error.hpp"
#include "components.hpp"

namespace cga {
namespace {

// Below this rho/sigma ratio the two norms are too close for the direction
// formula; sqrt(sigma^2 - u^2 v^2) has lost about half its digits there.
constexpr double kEqualNormRatio = 1e-4;
constexpr double kDirectionConditioning = 1e2;

EuclidVector unit_or_zero(const EuclidVector &v) {
  const double len = norm(v);
  return len > 0.0 ? v / len : EuclidVector{};
}

// Larger norm first; exact ties go to the lexicographically larger point.
bool precedes(const EuclidVector &a, const EuclidVector &b, double tol) {
  const double na = norm(a);
  const double nb = norm(b);
  if (std::abs(na - nb) > tol * std::max(na, nb))
    return na > nb;
  return std::tie(a.x, a.y, a.z) > std::tie(b.x, b.y, b.z);
}

void require_unit(const EuclidVector &phat, const char *what) {
  if (!is_finite(phat) || std::abs(norm(phat) - 1.0) > kDefaultTolerance)
    throw GeometryError(ErrorKind::InvalidArgument,
                        std::string(what) + " must be a unit vector");
}

} // namespace

PointPair PointPair::from_multivector(const Multivector &mv, double tol) {
  if (!mv.is_finite() || !is_homogeneous(mv, 2, tol))
    throw GeometryError(ErrorKind::InvalidArgument,
                        "point pair must be a finite bivector");
  return PointPair(grade_select(mv, 2));
}

PointPair point_pair(const ConformalPoint &p1, const ConformalPoint &p2,
                     double tol) {
  const Multivector v2 = p1.mv() ^ p2.mv();
  if (norm(v2) <= tol * detail::norm_product({&p1.mv(), &p2.mv()}))
    throw GeometryError(ErrorKind::DegeneratePair, "coincident points");
  return PointPair::from_multivector(v2, tol);
}

PairSplit split_point_pair(const PointPair &pair, double tol) {
  const Multivector &v2 = pair.mv();
  const NullCoefficients nc = to_null_basis(v2);

  // V2 = b - v n/2 + u ^ nb + gamma/2 N
  PairSplitIntermediates steps;
  const EuclidBivector b = detail::bivector_component(nc, 0);
  steps.u = detail::vector_component(nc, kNullOrigin);
  steps.v = -2.0 * detail::vector_component(nc, kNullInfinity);
  steps.gamma = 2.0 * nc[kNullInfinity | kNullOrigin];

  const double scale = norm(v2);
  const double uu = dot(steps.u, steps.u);
  const double vv = dot(steps.v, steps.v);
  if (!(std::sqrt(uu) > tol * scale))
    throw GeometryError(ErrorKind::DegeneratePair,
                        "nb component u vanishes");

  steps.sigma = 0.5 * steps.gamma * steps.gamma - dot(steps.u, steps.v);
  const double rho_sq = steps.sigma * steps.sigma - uu * vv;
  const double square = scalar_product(v2, v2);
  if (rho_sq < -tol * steps.sigma * steps.sigma ||
      square < -tol * scale * scale)
    throw GeometryError(ErrorKind::ImaginaryPair,
                        "sigma^2 - u^2 v^2 < 0 (virtual pair)");
  steps.rho = std::sqrt(std::max(rho_sq, 0.0));
  const double sum = steps.sigma + steps.rho;
  if (!(sum > 0.0))
    throw GeometryError(ErrorKind::ImaginaryPair, "sigma + rho <= 0");

  const double u_len = std::sqrt(uu);
  const double big = std::sqrt(sum) / u_len;
  // sigma - rho = u^2 v^2 / (sigma + rho), without the cancellation.
  const double small = std::sqrt(uu * vv / sum) / u_len;

  // s = p1 + p2 solves s * u = gamma and s ^ u = -2b, so
  // s = (gamma - 2b) u^-1, and |p1 - p2|^2 = 2(|p1|^2 + |p2|^2) - s^2.
  const Multivector s_mv =
      (Multivector(steps.gamma) - 2.0 * to_multivector(b)) *
      to_multivector(steps.u) / uu;
  const EuclidVector s = euclid_vector_part(s_mv);
  const double s_sq = dot(s, s);
  const double w_sq = std::max(4.0 * steps.sigma / uu - s_sq, 0.0);

  // The direction formula loses about (sigma/rho)^2 ulps, the sum and
  // difference form about s^2/w^2. The former is kept unless it is poorly
  // conditioned and the latter does better.
  const double sigma_sq = steps.sigma * steps.sigma;
  const double rho2 = steps.rho * steps.rho;
  const bool equal_norms =
      steps.rho <= kEqualNormRatio * steps.sigma ||
      (sigma_sq > kDirectionConditioning * rho2 &&
       s_sq * rho2 < w_sq * sigma_sq);

  EuclidVector first;
  EuclidVector second;
  if (!equal_norms) {
    // p_k = |p_k| unit(p_k^2 u + v); the factor sign(gamma) undoes an
    // overall sign of the representative (u, v, gamma all flip with it).
    const double orient = steps.gamma >= 0.0 ? 1.0 : -1.0;
    first = big * orient * unit_or_zero(big * big * steps.u + steps.v);
    second = small <= tol * big
                 ? EuclidVector{}
                 : small * orient *
                       unit_or_zero(small * small * steps.u + steps.v);
  } else {
    const EuclidVector w = std::sqrt(w_sq) * (steps.u / u_len);
    first = 0.5 * (s + w);
    second = 0.5 * (s - w);
    if (!precedes(first, second, tol))
      std::swap(first, second);
  }

  PairData data;
  data.p1 = first;
  data.p2 = second;
  const EuclidVector diff = first - second;
  data.r = 0.5 * norm(diff);
  data.phat = data.r > 0.0 ? diff / (2.0 * data.r) : EuclidVector{};
  data.c = 0.5 * (first + second);
  return {data, steps};
}

PointPair pair_circle_form(const PairData &data) {
  if (!(data.r >= 0.0) || !std::isfinite(data.r))
    throw GeometryError(ErrorKind::InvalidArgument, "radius must be >= 0");
  require_unit(data.phat, "phat");

  const Multivector phat = to_multivector(data.phat);
  const Multivector c = to_multivector(data.c);
  const double c_phat = dot(data.c, data.phat);
  const double r_sq = data.r * data.r;
  const Multivector braces =
      (phat ^ c) +
      0.5 * (((dot(data.c, data.c) + r_sq) * phat - 2.0 * c_phat * c) *
             basis::n) +
      phat * basis::nbar + c_phat * basis::minkowski;
  return PointPair::from_multivector(2.0 * data.r * braces);
}

Multivector pair_form_collinear_with_origin(const PairData &data) {
  const Multivector centre = embed_point(data.c).mv();
  return 2.0 * data.r *
         ((centre - 0.5 * data.r * data.r * basis::n) *
          to_multivector(data.phat) * basis::minkowski);
}

Multivector pair_form_perpendicular_midpoint(const PairData &data) {
  const Multivector centre = embed_point(data.c).mv();
  return -2.0 * data.r *
         ((centre + 0.5 * data.r * data.r * basis::n) *
          to_multivector(data.phat));
}

ConformalPoint conformal_midpoint(const PairData &data) {
  return embed_point(data.c);
}

} // namespace cga
