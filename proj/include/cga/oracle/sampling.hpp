#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cga/objects/euclid.hpp"
#include "cga/objects/point.hpp"

namespace cga::oracle {

// Circle with centre c, radius r in the plane of Ic; point k sits at angle
// angles[k] measured in the frame returned by circle_frame.
struct SampledCircle {
  EuclidVector c;
  double r = 1.0;
  EuclidBivector Ic{0.0, 0.0, 1.0};
  std::vector<double> angles;
};

struct SampledSphere {
  EuclidVector c;
  double r = 1.0;
  std::vector<EuclidVector> directions; // unit
};

// Orthonormal (a, b) spanning the plane of Ic with a ^ b a positive
// multiple of Ic. a is e1 projected into the plane (e2 when e1 is normal).
std::pair<EuclidVector, EuclidVector> circle_frame(const EuclidBivector &Ic);

// Positions c + r r_k. Throw InvalidArgument for r <= 0, a zero Ic, a
// non-unit direction or k outside 3..angles.size() (4..directions.size()
// for spheres).
std::vector<EuclidVector> circle_positions(const SampledCircle &spec,
                                           std::size_t k);
std::vector<EuclidVector> sphere_positions(const SampledSphere &spec,
                                           std::size_t k);

std::vector<ConformalPoint> sample_circle(const SampledCircle &spec,
                                          std::size_t k);
std::vector<ConformalPoint> sample_sphere(const SampledSphere &spec,
                                          std::size_t k);

// Seeded source of random instances. Coordinates are uniform in
// [-10, 10]; fits that come back degenerate are resampled.
// Degeneracy thresholds scale with the product of the embedded point norms,
// so a well-shaped triangle or tetrahedron far from the origin can still
// count as degenerate. True when the triangle area (3 points) or tetrahedron
// volume (4 points) clears tol * prod |embed(p_k)| by kThresholdMargin.
inline constexpr double kThresholdMargin = 10.0;
bool clears_degeneracy_threshold(const std::vector<EuclidVector> &pts);

class InstanceGenerator {
public:
  static constexpr double kExtent = 10.0;
  // Near-singular configurations are resampled below this conditioning.
  static constexpr double kConditioning = 1e-3;

  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  EuclidVector point();
  EuclidVector unit();
  // Uniform magnitude in [0.1, 10] with random sign.
  double scale_factor();

  std::pair<EuclidVector, EuclidVector> distinct_pair();
  // |p1| = |p2| exactly up to rounding.
  std::pair<EuclidVector, EuclidVector> equal_norm_pair();
  std::vector<EuclidVector> triangle();
  std::vector<EuclidVector> tetrahedron();
  SampledCircle circle(std::size_t k);
  SampledSphere sphere(std::size_t k);

private:
  std::mt19937_64 engine_;
};

} // namespace cga::oracle
