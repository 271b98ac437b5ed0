#include "cga/oracle/sampling.hpp"

#include <cmath>
#include <numbers>

#include "cga/core/error.hpp"
#include "cga/oracle/fits.hpp"

namespace cga::oracle {
namespace {

void require(bool ok, const char *what) {
  if (!ok)
    throw GeometryError(ErrorKind::InvalidArgument, what);
}

// Coefficient norm of p + p^2/2 n + nb on the diagonal basis.
double embedded_norm(const EuclidVector &p) {
  const double sq = dot(p, p);
  return std::sqrt(sq + 0.5 * (sq * sq + 1.0));
}

} // namespace

bool clears_degeneracy_threshold(const std::vector<EuclidVector> &pts) {
  double measure = 0.0;
  if (pts.size() == 3)
    measure = norm(cross(pts[1] - pts[0], pts[2] - pts[0]));
  else if (pts.size() == 4)
    measure = std::abs(
        dot(pts[1] - pts[0], cross(pts[2] - pts[0], pts[3] - pts[0])));
  else
    return true;
  double bound = kThresholdMargin * kDefaultTolerance;
  for (const auto &p : pts)
    bound *= embedded_norm(p);
  return measure > bound;
}

std::pair<EuclidVector, EuclidVector> circle_frame(const EuclidBivector &Ic) {
  require(norm(Ic) > 0.0, "Ic must be non-zero");
  const EuclidVector normal = dual_normal(Ic);
  EuclidVector seed{1.0, 0.0, 0.0};
  if (norm(cross(seed, normal)) < 1e-6)
    seed = {0.0, 1.0, 0.0};
  EuclidVector a = seed - dot(seed, normal) * normal;
  a = a / norm(a);
  return {a, cross(normal, a)};
}

std::vector<EuclidVector> circle_positions(const SampledCircle &spec,
                                           std::size_t k) {
  require(spec.r > 0.0 && std::isfinite(spec.r), "radius must be > 0");
  require(k >= 3 && k <= spec.angles.size(),
          "need 3 <= k <= number of angles");
  const auto [a, b] = circle_frame(spec.Ic);
  std::vector<EuclidVector> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const double t = spec.angles[j];
    out.push_back(spec.c + spec.r * (std::cos(t) * a + std::sin(t) * b));
  }
  return out;
}

std::vector<EuclidVector> sphere_positions(const SampledSphere &spec,
                                           std::size_t k) {
  require(spec.r > 0.0 && std::isfinite(spec.r), "radius must be > 0");
  require(k >= 4 && k <= spec.directions.size(),
          "need 4 <= k <= number of directions");
  std::vector<EuclidVector> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const EuclidVector &dir = spec.directions[j];
    require(std::abs(norm(dir) - 1.0) <= 1e-12, "directions must be unit");
    out.push_back(spec.c + spec.r * dir);
  }
  return out;
}

std::vector<ConformalPoint> sample_circle(const SampledCircle &spec,
                                          std::size_t k) {
  std::vector<ConformalPoint> out;
  for (const EuclidVector &p : circle_positions(spec, k))
    out.push_back(embed_point(p));
  return out;
}

std::vector<ConformalPoint> sample_sphere(const SampledSphere &spec,
                                          std::size_t k) {
  std::vector<ConformalPoint> out;
  for (const EuclidVector &p : sphere_positions(spec, k))
    out.push_back(embed_point(p));
  return out;
}

double InstanceGenerator::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

EuclidVector InstanceGenerator::point() {
  return {uniform(-kExtent, kExtent), uniform(-kExtent, kExtent),
          uniform(-kExtent, kExtent)};
}

EuclidVector InstanceGenerator::unit() {
  std::normal_distribution<double> gauss;
  for (;;) {
    const EuclidVector v{gauss(engine_), gauss(engine_), gauss(engine_)};
    const double len = norm(v);
    if (len > 1e-3)
      return v / len;
  }
}

double InstanceGenerator::scale_factor() {
  const double magnitude = uniform(0.1, 10.0);
  return uniform(0.0, 1.0) < 0.5 ? -magnitude : magnitude;
}

std::pair<EuclidVector, EuclidVector> InstanceGenerator::distinct_pair() {
  for (;;) {
    const EuclidVector a = point();
    const EuclidVector b = point();
    if (norm(a - b) > kConditioning * kExtent)
      return {a, b};
  }
}

std::pair<EuclidVector, EuclidVector> InstanceGenerator::equal_norm_pair() {
  for (;;) {
    const EuclidVector a = point();
    const EuclidVector b = norm(a) * unit();
    if (norm(a - b) > kConditioning * kExtent)
      return {a, b};
  }
}

std::vector<EuclidVector> InstanceGenerator::triangle() {
  for (;;) {
    std::vector<EuclidVector> pts{point(), point(), point()};
    if (circumcircle(pts[0], pts[1], pts[2], kConditioning) &&
        clears_degeneracy_threshold(pts))
      return pts;
  }
}

std::vector<EuclidVector> InstanceGenerator::tetrahedron() {
  for (;;) {
    std::vector<EuclidVector> pts{point(), point(), point(), point()};
    if (circumsphere(pts[0], pts[1], pts[2], pts[3], kConditioning) &&
        clears_degeneracy_threshold(pts))
      return pts;
  }
}

SampledCircle InstanceGenerator::circle(std::size_t k) {
  SampledCircle spec;
  spec.c = point();
  spec.r = uniform(0.1, kExtent);
  const EuclidVector normal = unit();
  spec.Ic = {normal.x, normal.y, normal.z};
  for (std::size_t j = 0; j < k; ++j)
    spec.angles.push_back(uniform(0.0, 2.0 * std::numbers::pi));
  return spec;
}

SampledSphere InstanceGenerator::sphere(std::size_t k) {
  SampledSphere spec;
  spec.c = point();
  spec.r = uniform(0.1, kExtent);
  for (std::size_t j = 0; j < k; ++j)
    spec.directions.push_back(unit());
  return spec;
}

} // namespace cga::oracle
