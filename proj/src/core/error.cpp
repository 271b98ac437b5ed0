#include "cga/core/error.hpp"

namespace cga {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::InvalidArgument:
    return "InvalidArgument";
  case ErrorKind::NotInvertible:
    return "NotInvertible";
  case ErrorKind::PointAtInfinity:
    return "PointAtInfinity";
  case ErrorKind::NotAPoint:
    return "NotAPoint";
  case ErrorKind::DegeneratePair:
    return "DegeneratePair";
  case ErrorKind::ImaginaryPair:
    return "ImaginaryPair";
  case ErrorKind::DegenerateLine:
    return "DegenerateLine";
  case ErrorKind::DegenerateCircle:
    return "DegenerateCircle";
  case ErrorKind::ImaginaryCircle:
    return "ImaginaryCircle";
  case ErrorKind::NotOriginPlane:
    return "NotOriginPlane";
  case ErrorKind::DegeneratePlane:
    return "DegeneratePlane";
  case ErrorKind::DegenerateSphere:
    return "DegenerateSphere";
  case ErrorKind::ImaginarySphere:
    return "ImaginarySphere";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorKind kind, const std::string &detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind) {}

} // namespace cga
