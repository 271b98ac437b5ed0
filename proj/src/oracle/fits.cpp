#include "cga/oracle/fits.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace cga::oracle {
namespace {

Eigen::Vector3d to_eigen(const EuclidVector &v) { return {v.x, v.y, v.z}; }
EuclidVector from_eigen(const Eigen::Vector3d &v) { return {v(0), v(1), v(2)}; }

bool collinear(const EuclidVector &p1, const EuclidVector &p2,
               const EuclidVector &p3, double conditioning) {
  const EuclidVector a = p2 - p1;
  const EuclidVector b = p3 - p1;
  return !(norm(cross(a, b)) > conditioning * norm(a) * norm(b));
}

} // namespace

std::optional<CircumCircle> circumcircle(const EuclidVector &p1,
                                         const EuclidVector &p2,
                                         const EuclidVector &p3,
                                         double conditioning) {
  if (collinear(p1, p2, p3, conditioning))
    return std::nullopt;
  const Eigen::Vector3d a = to_eigen(p1);
  const Eigen::Vector3d b = to_eigen(p2);
  const Eigen::Vector3d c = to_eigen(p3);
  const Eigen::Vector3d normal = (b - a).cross(c - a);

  Eigen::Matrix3d system;
  system.row(0) = (b - a).transpose();
  system.row(1) = (c - a).transpose();
  system.row(2) = normal.transpose();
  const Eigen::Vector3d rhs(0.5 * (b.squaredNorm() - a.squaredNorm()),
                            0.5 * (c.squaredNorm() - a.squaredNorm()),
                            normal.dot(a));
  const Eigen::Vector3d centre = system.fullPivLu().solve(rhs);

  CircumCircle out;
  out.c = from_eigen(centre);
  out.r = (a - centre).norm();
  const EuclidBivector plane = wedge(p1 - p2, p2 - p3);
  out.Ic = plane * (1.0 / norm(plane));
  return out;
}

std::optional<CircumSphere> circumsphere(const EuclidVector &p1,
                                         const EuclidVector &p2,
                                         const EuclidVector &p3,
                                         const EuclidVector &p4,
                                         double conditioning) {
  const EuclidVector a = p2 - p1;
  const EuclidVector b = p3 - p1;
  const EuclidVector c = p4 - p1;
  const double volume = dot(a, cross(b, c));
  if (!(std::abs(volume) > conditioning * norm(a) * norm(b) * norm(c)))
    return std::nullopt;

  const Eigen::Vector3d base = to_eigen(p1);
  Eigen::Matrix3d system;
  Eigen::Vector3d rhs;
  const EuclidVector others[3] = {p2, p3, p4};
  for (int k = 0; k < 3; ++k) {
    const Eigen::Vector3d pk = to_eigen(others[k]);
    system.row(k) = 2.0 * (pk - base).transpose();
    rhs(k) = pk.squaredNorm() - base.squaredNorm();
  }
  const Eigen::Vector3d centre = system.fullPivLu().solve(rhs);
  return CircumSphere{from_eigen(centre), (base - centre).norm()};
}

std::optional<SupportPlane> plane_support(const EuclidVector &p1,
                                          const EuclidVector &p2,
                                          const EuclidVector &p3,
                                          double conditioning) {
  if (collinear(p1, p2, p3, conditioning))
    return std::nullopt;
  EuclidVector normal = cross(p2 - p1, p3 - p1);
  normal = normal / norm(normal);
  return SupportPlane{normal, dot(normal, p1) * normal};
}

} // namespace cga::oracle
