#include "cga/cli/point_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace cga::cli {

ParseError::ParseError(std::size_t line, const std::string &detail)
    : std::runtime_error("parse error at line " + std::to_string(line) + ": " +
                         detail),
      line_(line) {}

std::vector<EuclidVector> parse_points(std::string_view text) {
  std::vector<EuclidVector> points;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);

    std::istringstream fields(line);
    std::vector<double> values;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != token.size() || !std::isfinite(value))
        throw ParseError(number, "'" + token + "' is not a finite real");
      values.push_back(value);
    }
    if (values.empty())
      continue;
    if (values.size() != 3)
      throw ParseError(number, "expected 3 coordinates, found " +
                                   std::to_string(values.size()));
    points.push_back({values[0], values[1], values[2]});
  }
  return points;
}

std::vector<EuclidVector> read_point_file(const std::string &path) {
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw FileError("cannot open point file '" + path + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return parse_points(text.str());
}

} // namespace cga::cli
