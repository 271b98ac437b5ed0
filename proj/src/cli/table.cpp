#include <sstream>

#include "cga/cli/inspect.hpp"
#include "cga/core/basis.hpp"

namespace cga::cli {

std::string product_table() {
  std::ostringstream out;
  const auto &order = canonical_null_order();
  for (unsigned a : order) {
    const Multivector left = null_blade(a);
    for (unsigned b : order)
      out << null_blade_name(a) << " * " << null_blade_name(b) << " = "
          << render(left * null_blade(b)) << '\n';
  }
  return out.str();
}

} // namespace cga::cli
