#include "cga/objects/incidence.hpp"

namespace cga {

bool incident(const Multivector &object, const ConformalPoint &point,
              double tol) {
  return norm(object ^ point.mv()) <= tol * norm(object) * norm(point.mv());
}

bool same_object(const Multivector &a, const Multivector &b, double tol) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0)
    return false;
  double ab = 0.0;
  for (unsigned k = 0; k < kBladeCount; ++k)
    ab += a[k] * b[k];
  const double lambda = ab / (nb * nb);
  if (lambda == 0.0)
    return false;
  return norm(a - lambda * b) <= tol * na;
}

} // namespace cga
