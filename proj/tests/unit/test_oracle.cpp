#include "support.hpp"

#include <cmath>
#include <numbers>

#include "cga/core/error.hpp"
#include "cga/objects/objects.hpp"
#include "cga/oracle/agreement.hpp"
#include "cga/oracle/cayley.hpp"
#include "cga/oracle/expansion.hpp"
#include "cga/oracle/fits.hpp"
#include "cga/oracle/pair_bruteforce.hpp"
#include "cga/oracle/sampling.hpp"

using namespace cga;
using namespace cga::oracle;
using cga::test::distance;

TEST_CASE("reference cayley table") {
  const CayleyTable table = reference_cayley_table();
  CHECK(table.entries[kE1][kE1] == CayleyEntry{0, 1});
  CHECK(table.entries[kEMinus][kEMinus] == CayleyEntry{0, -1});
  const CayleyEntry pm = table.entries[kEPlus][kEMinus];
  const CayleyEntry mp = table.entries[kEMinus][kEPlus];
  CHECK(pm.blade == mp.blade);
  CHECK(pm.sign == -mp.sign);
  CHECK(cayley_check().empty());
}

TEST_CASE("circumcircle") {
  const auto unit = circumcircle({1, 0, 0}, {0, 1, 0}, {-1, 0, 0});
  REQUIRE(unit);
  CHECK(norm(unit->c) <= 1e-12);
  CHECK(unit->r == doctest::Approx(1.0));
  CHECK(std::abs(unit->Ic.e12) == doctest::Approx(1.0));

  const auto shifted = circumcircle({2, 0, 0}, {1, 1, 0}, {0, 0, 0});
  REQUIRE(shifted);
  CHECK(distance(shifted->c, {1, 0, 0}) <= 1e-12);
  CHECK(shifted->r == doctest::Approx(1.0));

  CHECK_FALSE(circumcircle({0, 0, 0}, {1, 0, 0}, {2, 0, 0}));
}

TEST_CASE("circumsphere") {
  const auto unit = circumsphere({1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1});
  REQUIRE(unit);
  CHECK(norm(unit->c) <= 1e-12);
  CHECK(unit->r == doctest::Approx(1.0));

  const auto shifted = circumsphere({0, 0, 0}, {2, 0, 0}, {1, 1, 0}, {1, 0, 1});
  REQUIRE(shifted);
  CHECK(distance(shifted->c, {1, 0, 0}) <= 1e-12);
  CHECK(shifted->r == doctest::Approx(1.0));

  CHECK_FALSE(circumsphere({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}));
}

TEST_CASE("plane_support") {
  const auto lifted = plane_support({0, 0, 1}, {1, 0, 1}, {0, 1, 1});
  REQUIRE(lifted);
  CHECK(distance(lifted->d, {0, 0, 1}) <= 1e-12);
  CHECK(std::abs(lifted->normal.z) == doctest::Approx(1.0));
  const auto origin = plane_support({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
  REQUIRE(origin);
  CHECK(norm(origin->d) <= 1e-12);
  CHECK_FALSE(plane_support({0, 0, 0}, {1, 0, 0}, {2, 0, 0}));
}

TEST_CASE("expand_v3_corrected matches the wedge") {
  const auto wedge3 = [](const EuclidVector &a, const EuclidVector &b,
                         const EuclidVector &c) {
    return ((embed_point(a).mv() ^ embed_point(b).mv()) ^ embed_point(c).mv());
  };
  CHECK(distance(expand_v3_corrected({1, 0, 0}, {0, 1, 0}, {-1, 0, 0}),
                 wedge3({1, 0, 0}, {0, 1, 0}, {-1, 0, 0})) <= 1e-12);

  const NullCoefficients origin_triangle =
      to_null_basis(expand_v3_corrected({0, 0, 0}, {1, 0, 0}, {0, 1, 0}));
  CHECK(origin_triangle[kNullE1 | kNullE2 | kNullOrigin] == doctest::Approx(1.0));
  CHECK(origin_triangle[kNullE1 | kNullE3 | kNullOrigin] == 0.0);
  CHECK(origin_triangle[kNullE2 | kNullE3 | kNullOrigin] == 0.0);

  const NullCoefficients collinear =
      to_null_basis(expand_v3_corrected({1, 1, 1}, {2, 3, 4}, {3, 5, 7}));
  for (unsigned mask : {kNullE1 | kNullE2, kNullE1 | kNullE3, kNullE2 | kNullE3})
    CHECK(std::abs(collinear[mask | kNullOrigin]) <= 1e-12);

  InstanceGenerator gen(67);
  for (int trial = 0; trial < 500; ++trial) {
    const EuclidVector a = gen.point();
    const EuclidVector b = gen.point();
    const EuclidVector c = gen.point();
    const Multivector expected = wedge3(a, b, c);
    REQUIRE(distance(expand_v3_corrected(a, b, c), expected) <=
            1e-12 * std::max(1.0, norm(expected)));
  }
}

TEST_CASE("sample_circle and sample_sphere") {
  SampledCircle circle;
  circle.angles = {0.0, std::numbers::pi / 2.0, std::numbers::pi};
  const auto pts = sample_circle(circle, 3);
  REQUIRE(pts.size() == 3);
  CHECK(distance(pts[0].mv(), embed_point({1, 0, 0}).mv()) <= 1e-12);
  CHECK(distance(pts[1].mv(), embed_point({0, 1, 0}).mv()) <= 1e-12);
  CHECK(distance(pts[2].mv(), embed_point({-1, 0, 0}).mv()) <= 1e-12);
  CHECK_THROWS_AS(sample_circle(circle, 2), GeometryError);
  CHECK_THROWS_AS(sample_circle(circle, 4), GeometryError);
  SampledCircle flat = circle;
  flat.r = -1.0;
  CHECK_THROWS_AS(sample_circle(flat, 3), GeometryError);

  SampledSphere sphere;
  sphere.c = {1, 0, 0};
  sphere.directions = {{-1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto spts = sample_sphere(sphere, 4);
  CHECK(distance(extract_point(spts[0]), {0, 0, 0}) <= 1e-12);
  CHECK(distance(extract_point(spts[1]), {2, 0, 0}) <= 1e-12);
  CHECK(distance(extract_point(spts[2]), {1, 1, 0}) <= 1e-12);
  CHECK(distance(extract_point(spts[3]), {1, 0, 1}) <= 1e-12);
  SampledSphere skewed = sphere;
  skewed.directions[0] = {2, 0, 0};
  CHECK_THROWS_AS(sample_sphere(skewed, 4), GeometryError);

  InstanceGenerator gen(71);
  for (int trial = 0; trial < 100; ++trial) {
    SampledCircle spec = gen.circle(5);
    for (std::size_t k = 0; k < spec.angles.size(); ++k)
      spec.angles[k] = 2.0 * std::numbers::pi * k / 5.0 + gen.uniform(0.0, 0.5);
    const auto on_circle = sample_circle(spec, 5);
    const Circle V = circle_through(on_circle[0], on_circle[2], on_circle[4]);
    const CircleData data = circle_data(V);
    CHECK(distance(data.c, spec.c) <= 1e-9 * std::max(1.0, norm(spec.c)));
    CHECK(data.r == doctest::Approx(spec.r).epsilon(1e-9));
    for (const auto &p : on_circle)
      CHECK(incident(V.mv(), p));
  }
}

TEST_CASE("degeneracy threshold screening") {
  CHECK(clears_degeneracy_threshold({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
  CHECK_FALSE(clears_degeneracy_threshold({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}));
  CHECK(clears_degeneracy_threshold({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_FALSE(clears_degeneracy_threshold({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  // A small, well-shaped tetrahedron far from the origin is below the
  // norm-product threshold.
  const EuclidVector far{1e3, 0, 0};
  CHECK_FALSE(clears_degeneracy_threshold(
      {far, far + EuclidVector{1, 0, 0}, far + EuclidVector{0, 1, 0},
       far + EuclidVector{0, 0, 1}}));
}

TEST_CASE("bruteforce solver on virtual pairs") {
  // Circle-form pair with r^2 -> -s^2 about c = e2, direction e1.
  const Multivector c = basis::e2;
  const Multivector ph = basis::e1;
  const double s2 = 4.0;
  const Multivector v2 = (ph ^ c) + 0.5 * ((1.0 - s2) * ph * basis::n) + ph * basis::nbar;
  const PointPair pair = PointPair::from_multivector(grade_select(v2, 2));
  CHECK(pair_solve_bruteforce(pair).kind == PairKind::Imaginary);
  CHECK_THROWS_AS(split_point_pair(pair), GeometryError);
}

TEST_CASE("agreement suites pass at reduced size") {
  for (const auto &report : run_all(2024, 100)) {
    INFO(report.name << " max_error=" << report.max_error);
    CHECK(report.passed());
    CHECK(report.trials > 0);
  }
}

TEST_CASE("agreement reports are reproducible") {
  const auto a = pair_split_roundtrip(5, 50, 1e-9);
  const auto b = pair_split_roundtrip(5, 50, 1e-9);
  CHECK(a.max_error == b.max_error);
  CHECK(relative_error(2.0, 1.0) == 1.0);
  CHECK(relative_error(0.5, 0.0) == 0.5);
}
