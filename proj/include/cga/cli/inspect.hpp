#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cga/core/multivector.hpp"
#include "cga/objects/euclid.hpp"

namespace cga::cli {

enum class ObjectKind { Point, Pair, Line, Circle, Plane, Sphere };

std::optional<ObjectKind> parse_kind(std::string_view name);
std::string_view kind_name(ObjectKind kind);

// Number of points each kind is built from: 1, 2, 2, 3, 3, 4.
std::size_t arity(ObjectKind kind);

class ArityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ReportField {
  std::string key;
  std::string value;
};

// The 3D information of one homogeneous object, already formatted. Plain
// and JSON output are both written from these strings.
struct InspectReport {
  ObjectKind kind = ObjectKind::Point;
  std::string multivector;
  std::vector<ReportField> fields;
  std::vector<std::string> flags;

  const std::string *find(std::string_view key) const;
};

// Builds the object from the points and runs its extraction. Throws
// ArityError on a wrong point count and GeometryError on degenerate input.
InspectReport inspect(ObjectKind kind, const std::vector<EuclidVector> &points,
                      double tol = kDefaultTolerance);

std::string format_plain(const InspectReport &report);
std::string format_json(const InspectReport &report);

// "(x, y, z)" at %.9g; components below tol * max(1, |v|) print as 0.
std::string format_vector(const EuclidVector &v, double tol = kDefaultTolerance);
std::string format_scalar(double value, double tol = kDefaultTolerance);

// All 1024 products of null-basis blades, one "a * b = ab" line each.
std::string product_table();

} // namespace cga::cli
