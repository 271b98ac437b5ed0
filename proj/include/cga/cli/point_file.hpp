#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cga/objects/euclid.hpp"

namespace cga::cli {

// A data line that is not exactly three finite reals. The message names
// the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &detail);

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class FileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One point per line, "x y z"; `#` starts a comment, blank lines are
// skipped.
std::vector<EuclidVector> parse_points(std::string_view text);

std::vector<EuclidVector> read_point_file(const std::string &path);

} // namespace cga::cli
