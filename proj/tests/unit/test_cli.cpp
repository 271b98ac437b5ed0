#include "support.hpp"

#include <algorithm>

#include <json.hpp>

#include "cga/cli/inspect.hpp"
#include "cga/cli/point_file.hpp"
#include "cga/core/error.hpp"
#include "cga/oracle/fits.hpp"

using namespace cga;
using namespace cga::cli;

TEST_CASE("parse_points") {
  const auto two = parse_points("1 0 0\n0 1 0\n");
  REQUIRE(two.size() == 2);
  CHECK(two[0] == EuclidVector{1, 0, 0});
  CHECK(two[1] == EuclidVector{0, 1, 0});

  const auto origin = parse_points("# c\n0 0 0\n");
  REQUIRE(origin.size() == 1);
  CHECK(origin[0] == EuclidVector{0, 0, 0});

  CHECK(parse_points("\n  \n# only comments\n").empty());
  CHECK(parse_points("1.5e2 -2 +3 # trailing\r\n")[0] == EuclidVector{150, -2, 3});

  try {
    parse_points("1 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  try {
    parse_points("0 0 0\n\n1 x 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_points("1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_points("1 2 inf\n"), ParseError);
  CHECK_THROWS_AS(parse_points("1 2 nan\n"), ParseError);
  CHECK_THROWS_AS(read_point_file("/nonexistent/points.txt"), FileError);
}

TEST_CASE("kinds and arities") {
  CHECK(parse_kind("circle") == ObjectKind::Circle);
  CHECK_FALSE(parse_kind("torus"));
  CHECK(kind_name(ObjectKind::Sphere) == "sphere");
  CHECK(arity(ObjectKind::Point) == 1);
  CHECK(arity(ObjectKind::Pair) == 2);
  CHECK(arity(ObjectKind::Line) == 2);
  CHECK(arity(ObjectKind::Circle) == 3);
  CHECK(arity(ObjectKind::Plane) == 3);
  CHECK(arity(ObjectKind::Sphere) == 4);
  CHECK_THROWS_AS(inspect(ObjectKind::Circle, parse_points("0 0 0\n1 0 0\n")), ArityError);
  CHECK_THROWS_AS(inspect(ObjectKind::Point, parse_points("0 0 0\n1 0 0\n")), ArityError);
}

TEST_CASE("inspect circle") {
  const auto pts = parse_points("1 0 0\n0 1 0\n-1 0 0\n");
  const InspectReport report = inspect(ObjectKind::Circle, pts);
  REQUIRE(report.find("center"));
  CHECK(*report.find("center") == "(0, 0, 0)");
  CHECK(*report.find("radius") == "1");
  CHECK(*report.find("plane") == "e1^e2");
  CHECK(format_plain(report).find("center = (0, 0, 0)\n") != std::string::npos);
  CHECK(format_plain(report).find("flags = origin_in_plane\n") != std::string::npos);
}

TEST_CASE("inspect sphere") {
  const auto pts = parse_points("0 0 0\n2 0 0\n1 1 0\n1 0 1\n");
  const InspectReport report = inspect(ObjectKind::Sphere, pts);
  CHECK(*report.find("center") == "(1, 0, 0)");
  CHECK(*report.find("radius") == "1");
}

TEST_CASE("inspect other kinds") {
  const InspectReport point = inspect(ObjectKind::Point, parse_points("0.5 -2 3\n"));
  CHECK(*point.find("position") == "(0.5, -2, 3)");

  const InspectReport pair = inspect(ObjectKind::Pair, parse_points("0 1 0\n2 0 0\n"));
  CHECK(*pair.find("p1") == "(2, 0, 0)");
  CHECK(*pair.find("p2") == "(0, 1, 0)");

  const InspectReport line = inspect(ObjectKind::Line, parse_points("1 0 0\n1 1 0\n"));
  CHECK(*line.find("direction") == "(0, 1, 0)");
  CHECK(*line.find("moment") == "e1^e2");

  const InspectReport plane = inspect(ObjectKind::Plane, parse_points("0 0 1\n1 0 1\n0 1 1\n"));
  CHECK(*plane.find("location") == "(0, 0, 1)");
  CHECK(*plane.find("plane") == "e1^e2");
  CHECK(plane.flags.empty());
}

TEST_CASE("inspect degeneracies") {
  try {
    inspect(ObjectKind::Line, parse_points("1 2 3\n1 2 3\n"));
    FAIL("expected a degeneracy");
  } catch (const GeometryError &e) {
    CHECK(e.kind() == ErrorKind::DegenerateLine);
    CHECK(std::string(e.what()).find("DegenerateLine") != std::string::npos);
  }
  CHECK_THROWS_AS(inspect(ObjectKind::Circle, parse_points("0 0 0\n1 0 0\n2 0 0\n")),
                  GeometryError);
}

TEST_CASE("json output carries the plain values") {
  const auto pts = parse_points("3 1 -2\n-1 4 0.25\n0.5 0.5 7\n");
  for (auto kind : {ObjectKind::Circle, ObjectKind::Plane}) {
    const InspectReport report = inspect(kind, pts);
    const auto doc = nlohmann::json::parse(format_json(report));
    CHECK(doc["kind"] == std::string(kind_name(kind)));
    CHECK(doc["multivector"] == report.multivector);
    const std::string plain = format_plain(report);
    for (const auto &field : report.fields) {
      CHECK(doc["fields"][field.key] == field.value);
      CHECK(plain.find(field.key + " = " + field.value + "\n") != std::string::npos);
    }
  }
}

TEST_CASE("inspect agrees with the oracle to printed precision") {
  const EuclidVector a{3, 1, -2}, b{-1, 4, 0.25}, c{0.5, 0.5, 7};
  const InspectReport report = inspect(ObjectKind::Circle, {a, b, c});
  const auto fit = oracle::circumcircle(a, b, c);
  REQUIRE(fit);
  CHECK(*report.find("center") == format_vector(fit->c));
  CHECK(*report.find("radius") == format_scalar(fit->r));
}

TEST_CASE("formatting") {
  CHECK(format_vector({1e-17, -0.0, 2}) == "(0, 0, 2)");
  CHECK(format_vector({1.0 / 3.0, 0, 0}) == "(0.333333333, 0, 0)");
  CHECK(format_scalar(1e-12) == "0");
  CHECK(format_scalar(2.5) == "2.5");
}

TEST_CASE("product table") {
  const std::string table = product_table();
  CHECK(std::count(table.begin(), table.end(), '\n') == 1024);
  CHECK(table.find("\nn * nb = -1 + n^nb\n") != std::string::npos);
  CHECK(table.rfind("1 * 1 = 1\n", 0) == 0);
  CHECK(table.find("\ne1 * e1 = 1\n") != std::string::npos);
  CHECK(table.find("\nn * n = 0\n") != std::string::npos);
  CHECK(table.find("\nnb * n = -1 - n^nb\n") != std::string::npos);
}
