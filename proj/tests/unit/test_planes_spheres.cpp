#include "support.hpp"

#include <cmath>

#include "cga/core/error.hpp"
#include "cga/objects/objects.hpp"
#include "cga/oracle/fits.hpp"
#include "cga/oracle/sampling.hpp"

using namespace cga;
using cga::test::distance;
using cga::test::unit;

namespace {

ConformalPoint P(double x, double y, double z) { return embed_point({x, y, z}); }

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const GeometryError &e) {
    return e.kind();
  }
  FAIL("expected a GeometryError");
  return ErrorKind::InvalidArgument;
}

// Bivectors are compared up to sign: orientation follows the point order.
double distance_up_to_sign(const EuclidBivector &a, const EuclidBivector &b) {
  return std::min(distance(unit(a), b), distance(unit(a), -1.0 * b));
}

} // namespace

TEST_CASE("plane_through") {
  const Plane plane = plane_through(P(0, 0, 1), P(1, 0, 1), P(0, 1, 1));
  CHECK(is_homogeneous(plane.mv(), 4));
  CHECK((plane.mv() ^ basis::n).is_zero());
  CHECK(kind_of([] { plane_through(P(0, 0, 0), P(1, 0, 0), P(2, 0, 0)); }) ==
        ErrorKind::DegeneratePlane);
  CHECK(kind_of([] {
          Plane::from_multivector(
              sphere_through(P(1, 0, 0), P(-1, 0, 0), P(0, 1, 0), P(0, 0, 1)).mv());
        }) == ErrorKind::InvalidArgument);
}

TEST_CASE("plane_data examples") {
  const PlaneData lifted = plane_data(plane_through(P(0, 0, 1), P(1, 0, 1), P(0, 1, 1)));
  CHECK(distance_up_to_sign(lifted.Ip, {0, 0, 1}) <= 1e-12);
  CHECK(distance(lifted.d, {0, 0, 1}) <= 1e-12);

  const PlaneData origin = plane_data(plane_through(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)));
  CHECK(norm(origin.d) <= 1e-12);
  CHECK(distance_up_to_sign(origin.Ip, {0, 0, 1}) <= 1e-12);

  const PlaneData x_one = plane_data(plane_through(P(1, 0, 0), P(1, 1, 0), P(1, 0, 1)));
  CHECK(distance(x_one.d, {1, 0, 0}) <= 1e-12);
  CHECK(distance_up_to_sign(x_one.Ip, {1, 0, 0}) <= 1e-12);
}

TEST_CASE("plane_data against the support-vector oracle") {
  oracle::InstanceGenerator gen(53);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = gen.triangle();
    const auto fit = oracle::plane_support(t[0], t[1], t[2]);
    REQUIRE(fit);
    const Plane plane = plane_through(embed_point(t[0]), embed_point(t[1]), embed_point(t[2]));
    const PlaneData data = plane_data(plane);
    CHECK(distance(data.d, fit->d) <= 1e-9 * std::max(1.0, norm(fit->d)));
    CHECK(norm(left_contraction(to_multivector(data.d), to_multivector(data.Ip))) <=
          1e-9 * std::max(1.0, norm(data.d)) * norm(data.Ip));
    CHECK(incident(plane.mv(), embed_point(data.d)));
  }
}

TEST_CASE("plane_alt_param") {
  const Plane origin = plane_alt_param(P(0, 0, 0), {0, 0, 1});
  CHECK(distance(origin.mv(), -(basis::e12 * basis::minkowski)) <= 1e-12);

  CHECK(same_object(plane_alt_param(P(0, 0, 1), {0, 0, 1}).mv(),
                    plane_through(P(0, 0, 1), P(1, 0, 1), P(0, 1, 1)).mv()));
  CHECK(same_object(plane_alt_param(P(1, 0, 0), {0, 0, 1}).mv(),
                    plane_through(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)).mv()));
  CHECK(kind_of([] { plane_alt_param(P(1, 0, 0), {}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("sphere_through and sphere_data examples") {
  const Sphere unit_sphere = sphere_through(P(1, 0, 0), P(-1, 0, 0), P(0, 1, 0), P(0, 0, 1));
  CHECK(is_homogeneous(unit_sphere.mv(), 4));
  CHECK_FALSE((unit_sphere.mv() ^ basis::n).is_zero());
  const Multivector is = sphere_pseudoscalar(unit_sphere);
  CHECK(distance(is, is[kE1 | kE2 | kE3] * basis::i3d) <= 1e-12);
  CHECK(is[kE1 | kE2 | kE3] != 0.0);

  const SphereData data = sphere_data(unit_sphere);
  CHECK(data.r == doctest::Approx(1.0));
  CHECK(norm(data.c) <= 1e-12);
  CHECK(distance(data.C.mv(), basis::nbar) <= 1e-12);
  CHECK(data.is_scale == doctest::Approx(is[kE1 | kE2 | kE3]));

  const SphereData shifted =
      sphere_data(sphere_through(P(0, 0, 0), P(2, 0, 0), P(1, 1, 0), P(1, 0, 1)));
  CHECK(shifted.r == doctest::Approx(1.0));
  CHECK(distance(shifted.c, {1, 0, 0}) <= 1e-12);

  CHECK(kind_of([] { sphere_through(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)); }) ==
        ErrorKind::DegenerateSphere);
  const Multivector plane4 = plane_through(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)).mv();
  CHECK(kind_of([&] { Sphere::from_multivector(plane4); }) == ErrorKind::DegenerateSphere);
}

TEST_CASE("imaginary sphere") {
  // (C - r^2/2 n) i N with r^2 = -1.
  const Multivector v4 = (basis::nbar + 0.5 * basis::n) * basis::i3d * basis::minkowski;
  CHECK(kind_of([&] { sphere_data(Sphere::from_multivector(v4)); }) ==
        ErrorKind::ImaginarySphere);
}

TEST_CASE("sphere_from_center_radius") {
  CHECK(same_object(sphere_from_center_radius(P(0, 0, 0), 1.0).mv(),
                    sphere_through(P(1, 0, 0), P(-1, 0, 0), P(0, 1, 0), P(0, 0, 1)).mv()));
  CHECK(same_object(sphere_from_center_radius(P(1, 0, 0), 1.0).mv(),
                    sphere_through(P(0, 0, 0), P(2, 0, 0), P(1, 1, 0), P(1, 0, 1)).mv()));
  CHECK(kind_of([] { sphere_from_center_radius(P(0, 0, 0), 0.0); }) ==
        ErrorKind::InvalidArgument);

  oracle::InstanceGenerator gen(59);
  for (int trial = 0; trial < 1000; ++trial) {
    const EuclidVector c = gen.point();
    const double r = gen.uniform(0.1, 10.0);
    const SphereData data = sphere_data(sphere_from_center_radius(embed_point(c), r));
    REQUIRE(distance(data.c, c) <= 1e-9 * std::max(1.0, norm(c)));
    REQUIRE(std::abs(data.r - r) <= 1e-9 * r);
  }
}

TEST_CASE("sphere_data against the circumsphere oracle") {
  oracle::InstanceGenerator gen(61);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = gen.tetrahedron();
    const auto fit = oracle::circumsphere(t[0], t[1], t[2], t[3]);
    REQUIRE(fit);
    const Sphere sphere = sphere_through(embed_point(t[0]), embed_point(t[1]),
                                         embed_point(t[2]), embed_point(t[3]));
    const SphereData data = sphere_data(sphere);
    CHECK(distance(data.c, fit->c) <= 1e-9 * std::max(1.0, norm(fit->c)));
    CHECK(std::abs(data.r - fit->r) <= 1e-9 * std::max(1.0, fit->r));
    for (const auto &p : t)
      CHECK(incident(sphere.mv(), embed_point(p)));
  }
}

TEST_CASE("grade classification") {
  const Multivector pair = point_pair(P(0, 0, 0), P(1, 0, 0)).mv();
  const Multivector line = line_through(P(0, 0, 0), P(1, 0, 0)).mv();
  const Multivector circle = circle_through(P(1, 0, 0), P(0, 1, 0), P(-1, 0, 0)).mv();
  const Multivector plane = plane_through(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)).mv();
  const Multivector sphere =
      sphere_through(P(1, 0, 0), P(-1, 0, 0), P(0, 1, 0), P(0, 0, 1)).mv();
  CHECK(is_homogeneous(pair, 2));
  CHECK(is_homogeneous(line, 3));
  CHECK(is_homogeneous(circle, 3));
  CHECK(is_homogeneous(plane, 4));
  CHECK(is_homogeneous(sphere, 4));
  CHECK((line ^ basis::n).is_zero());
  CHECK((plane ^ basis::n).is_zero());
  CHECK_FALSE((circle ^ basis::n).is_zero());
  CHECK_FALSE((sphere ^ basis::n).is_zero());
}

TEST_CASE("same_object") {
  const Multivector L = line_through(P(0, 0, 0), P(1, 0, 0)).mv();
  CHECK(same_object(L, 3.0 * L));
  CHECK(same_object(L, -1.0 * L));
  CHECK_FALSE(same_object(L, line_through(P(0, 0, 0), P(0, 1, 0)).mv()));
  CHECK_FALSE(same_object(L, Multivector()));
  CHECK_FALSE(same_object(Multivector(), L));
}
