#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cga {

enum class ErrorKind {
  InvalidArgument,
  NotInvertible,
  PointAtInfinity,
  NotAPoint,
  DegeneratePair,
  ImaginaryPair,
  DegenerateLine,
  DegenerateCircle,
  ImaginaryCircle,
  NotOriginPlane,
  DegeneratePlane,
  DegenerateSphere,
  ImaginarySphere,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the kernel carries a kind so callers (the CLI in
// particular) can tell degenerate geometry apart from misuse.
class GeometryError : public std::runtime_error {
public:
  GeometryError(ErrorKind kind, const std::string &detail);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace cga
