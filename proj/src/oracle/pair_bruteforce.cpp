#include "cga/oracle/pair_bruteforce.hpp"

#include <cmath>

#include "cga/core/basis.hpp"
#include "cga/core/error.hpp"

namespace cga::oracle {

BruteForcePair pair_solve_bruteforce(const PointPair &pair, double tol) {
  const Multivector &v2 = pair.mv();
  const NullCoefficients carrier = to_null_basis(v2 ^ basis::n);

  // Carrier line m n + d N: direction from the e_k^n^nb blades, moment
  // from the e_i^e_j^n blades.
  const unsigned dn = kNullInfinity | kNullOrigin;
  const EuclidVector d{carrier[kNullE1 | dn], carrier[kNullE2 | dn],
                       carrier[kNullE3 | dn]};
  const EuclidVector moment_dual{carrier[kNullE2 | kNullE3 | kNullInfinity],
                                 -carrier[kNullE1 | kNullE3 | kNullInfinity],
                                 carrier[kNullE1 | kNullE2 | kNullInfinity]};
  const double d_len = norm(d);
  if (!(d_len > tol * norm(v2)))
    throw GeometryError(ErrorKind::DegeneratePair,
                        "carrier line has no direction");

  // x ^ d = m  <=>  x x d = moment_dual; foot point x0 is orthogonal to d.
  const EuclidVector x0 = cross(d, moment_dual) / (d_len * d_len);
  const EuclidVector dhat = d / d_len;

  // X(t) = [x0 + x0^2/2 n + nb] + t dhat + t^2 (n/2)
  const Multivector x_const = x0.x * basis::e1 + x0.y * basis::e2 +
                              x0.z * basis::e3 +
                              0.5 * dot(x0, x0) * basis::n + basis::nbar;
  const Multivector x_lin =
      dhat.x * basis::e1 + dhat.y * basis::e2 + dhat.z * basis::e3;
  const Multivector a_mv = v2 ^ x_const;
  const Multivector b_mv = v2 ^ x_lin;
  const Multivector c_mv = v2 ^ (0.5 * basis::n);

  // Every component of V2 ^ X(t) shares the same roots; use the one with
  // the strongest quadratic term.
  unsigned best = 0;
  for (unsigned k = 1; k < kBladeCount; ++k)
    if (std::abs(c_mv[k]) > std::abs(c_mv[best]))
      best = k;
  const double qa = c_mv[best];
  const double qb = b_mv[best];
  const double qc = a_mv[best];

  const double disc = qb * qb - 4.0 * qa * qc;
  const double disc_scale = std::max(qb * qb, std::abs(4.0 * qa * qc));
  BruteForcePair out;
  if (disc < -tol * disc_scale)
    return out;

  const double root = std::sqrt(std::max(disc, 0.0));
  const double q = -0.5 * (qb + (qb >= 0.0 ? root : -root));
  const double t1 = q / qa;
  const double t2 = q != 0.0 ? qc / q : t1;
  out.kind = PairKind::Real;
  out.a = x0 + t1 * dhat;
  out.b = x0 + t2 * dhat;
  return out;
}

} // namespace cga::oracle
