#include "support.hpp"

#include <random>
#include <set>

using namespace cga;

TEST_CASE("null basis round trip") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    Multivector a;
    for (unsigned k = 0; k < kBladeCount; ++k)
      a[k] = coef(rng);
    const Multivector back = from_null_basis(to_null_basis(a));
    CHECK(norm(back - a) <= 1e-12 * norm(a));
  }
}

TEST_CASE("null basis generators") {
  CHECK(null_blade(kNullInfinity) == basis::n);
  CHECK(null_blade(kNullOrigin) == basis::nbar);
  CHECK(null_blade(kNullInfinity | kNullOrigin) == basis::minkowski);
  CHECK(null_blade(0) == Multivector(1.0));
  CHECK(null_vector(1.0, 0.0, 0.0, 0.0, 0.0) == basis::nbar);
  CHECK(null_vector(0.0, 1.0, 2.0, 3.0, 0.0) ==
        basis::e1 + 2.0 * basis::e2 + 3.0 * basis::e3);

  const NullCoefficients nc = to_null_basis(basis::e_plus);
  CHECK(nc[kNullInfinity] == 0.5);
  CHECK(nc[kNullOrigin] == -1.0);
}

TEST_CASE("null blade names") {
  CHECK(null_blade_name(0) == "1");
  CHECK(null_blade_name(kNullE1) == "e1");
  CHECK(null_blade_name(kNullE1 | kNullE2) == "e1^e2");
  CHECK(null_blade_name(kNullInfinity | kNullOrigin) == "n^nb");
  CHECK(null_blade_name(kNullE3 | kNullOrigin) == "e3^nb");

  const auto &order = canonical_null_order();
  REQUIRE(order.size() == kBladeCount);
  CHECK(order.front() == 0);
  CHECK(std::set<unsigned>(order.begin(), order.end()).size() == kBladeCount);
  for (std::size_t k = 1; k < order.size(); ++k) {
    const int ga = blade_grade(order[k - 1]);
    const int gb = blade_grade(order[k]);
    CHECK(ga <= gb);
    if (ga == gb)
      CHECK(null_blade_name(order[k - 1]) < null_blade_name(order[k]));
  }
}

TEST_CASE("canonical rendering") {
  const Multivector a = 1.0 + 2.0 * (basis::e1 ^ basis::e2) +
                        0.5 * basis::minkowski;
  CHECK(render(a) == "1 + 2*e1^e2 + 0.5*n^nb");
  CHECK(render(basis::n * basis::nbar) == "-1 + n^nb");
  CHECK(render(Multivector()) == "0");
  CHECK(render(-basis::e1) == "-e1");
  CHECK(render(basis::e1 - 3.0 * basis::e2) == "e1 - 3*e2");
  CHECK(render(basis::e_plus) == "0.5*n - nb");
  CHECK(render(basis::e1 + 1e-14 * basis::e2) == "e1");
}

TEST_CASE("real formatting") {
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(0.1 + 0.2) == "0.3");
  CHECK(format_real(1.0 / 3.0) == "0.333333333");
  CHECK(format_real(-2.5e-7) == "-2.5e-07");
}
