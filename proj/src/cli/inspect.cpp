#include "cga/cli/inspect.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cga/core/basis.hpp"
#include "cga/objects/objects.hpp"

namespace cga::cli {
namespace {

constexpr std::array<std::string_view, 6> kKindNames = {
    "point", "pair", "line", "circle", "plane", "sphere"};

std::string format_bivector(const EuclidBivector &b, double tol) {
  const double len = norm(b);
  return render(to_multivector(len > 0.0 ? b * (1.0 / len) : b), tol);
}

std::string format_moment(const EuclidBivector &b, double tol) {
  return render(to_multivector(b), tol);
}

} // namespace

const std::string *InspectReport::find(std::string_view key) const {
  for (const auto &field : fields)
    if (field.key == key)
      return &field.value;
  return nullptr;
}

std::optional<ObjectKind> parse_kind(std::string_view name) {
  for (std::size_t k = 0; k < kKindNames.size(); ++k)
    if (kKindNames[k] == name)
      return static_cast<ObjectKind>(k);
  return std::nullopt;
}

std::string_view kind_name(ObjectKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::size_t arity(ObjectKind kind) {
  switch (kind) {
  case ObjectKind::Point:
    return 1;
  case ObjectKind::Pair:
  case ObjectKind::Line:
    return 2;
  case ObjectKind::Circle:
  case ObjectKind::Plane:
    return 3;
  case ObjectKind::Sphere:
    return 4;
  }
  return 0;
}

std::string format_scalar(double value, double tol) {
  return format_real(std::abs(value) < tol ? 0.0 : value);
}

std::string format_vector(const EuclidVector &v, double tol) {
  const double cutoff = tol * std::max(1.0, norm(v));
  const auto component = [cutoff](double x) {
    return format_real(std::abs(x) < cutoff ? 0.0 : x);
  };
  return "(" + component(v.x) + ", " + component(v.y) + ", " +
         component(v.z) + ")";
}

InspectReport inspect(ObjectKind kind, const std::vector<EuclidVector> &points,
                      double tol) {
  if (points.size() != arity(kind))
    throw ArityError(std::string(kind_name(kind)) + " needs exactly " +
                     std::to_string(arity(kind)) + " points, got " +
                     std::to_string(points.size()));

  std::vector<ConformalPoint> P;
  for (const auto &p : points)
    P.push_back(embed_point(p));

  InspectReport report;
  report.kind = kind;
  auto add = [&report](std::string key, std::string value) {
    report.fields.push_back({std::move(key), std::move(value)});
  };

  switch (kind) {
  case ObjectKind::Point: {
    report.multivector = render(P[0].mv(), tol);
    add("position", format_vector(extract_point(P[0], tol), tol));
    break;
  }
  case ObjectKind::Pair: {
    const PointPair pair = point_pair(P[0], P[1], tol);
    report.multivector = render(pair.mv(), tol);
    const PairData data = split_point_pair(pair, tol).data;
    add("p1", format_vector(data.p1, tol));
    add("p2", format_vector(data.p2, tol));
    break;
  }
  case ObjectKind::Line: {
    const Line line = line_through(P[0], P[1], tol);
    report.multivector = render(line.mv(), tol);
    const LineData data = line_data(line, tol);
    add("direction", format_vector(data.d, tol));
    add("moment", format_moment(data.m, tol));
    if (norm(data.m) <= tol * norm(data.d))
      report.flags.push_back("through_origin");
    break;
  }
  case ObjectKind::Circle: {
    const Circle circle = circle_through(P[0], P[1], P[2], tol);
    report.multivector = render(circle.mv(), tol);
    const CircleData data = circle_data(circle, tol);
    add("plane", format_bivector(data.Ic, tol));
    add("center", format_vector(data.c, tol));
    add("radius", format_scalar(data.r, tol));
    if (norm(data.c_perp) <= tol * std::max(1.0, norm(data.c) + data.r))
      report.flags.push_back("origin_in_plane");
    break;
  }
  case ObjectKind::Plane: {
    const Plane plane = plane_through(P[0], P[1], P[2], tol);
    report.multivector = render(plane.mv(), tol);
    const PlaneData data = plane_data(plane, tol);
    add("plane", format_bivector(data.Ip, tol));
    add("location", format_vector(data.d, tol));
    if (norm(data.d) <= tol)
      report.flags.push_back("origin_in_plane");
    break;
  }
  case ObjectKind::Sphere: {
    const Sphere sphere = sphere_through(P[0], P[1], P[2], P[3], tol);
    report.multivector = render(sphere.mv(), tol);
    const SphereData data = sphere_data(sphere, tol);
    add("center", format_vector(data.c, tol));
    add("radius", format_scalar(data.r, tol));
    break;
  }
  }
  return report;
}

std::string format_plain(const InspectReport &report) {
  std::ostringstream out;
  out << "kind = " << kind_name(report.kind) << '\n';
  out << "multivector = " << report.multivector << '\n';
  for (const auto &field : report.fields)
    out << field.key << " = " << field.value << '\n';
  out << "flags = ";
  if (report.flags.empty())
    out << "none";
  for (std::size_t k = 0; k < report.flags.size(); ++k)
    out << (k ? ", " : "") << report.flags[k];
  out << '\n';
  return out.str();
}

std::string format_json(const InspectReport &report) {
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();
  for (const auto &field : report.fields)
    fields[field.key] = field.value;
  nlohmann::ordered_json doc;
  doc["kind"] = kind_name(report.kind);
  doc["multivector"] = report.multivector;
  doc["fields"] = std::move(fields);
  doc["flags"] = report.flags;
  return doc.dump(2) + "\n";
}

} // namespace cga::cli
