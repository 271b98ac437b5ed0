#include "cga/core/multivector.hpp"

#include <cmath>
#include <string>

#include "cga/core/error.hpp"

namespace cga {
namespace {

using SignTable = std::array<std::array<signed char, kBladeCount>, kBladeCount>;

constexpr SignTable make_sign_table() {
  SignTable table{};
  for (unsigned a = 0; a < kBladeCount; ++a)
    for (unsigned b = 0; b < kBladeCount; ++b)
      table[a][b] = static_cast<signed char>(blade_product_sign(a, b));
  return table;
}

constexpr SignTable kSigns = make_sign_table();

enum class Keep { All, Disjoint, LeftInRight, RightInLeft };

template <Keep keep>
Multivector accumulate(const Multivector &a, const Multivector &b) {
  Multivector out;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const double ai = a[i];
    if (ai == 0.0)
      continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      const double bj = b[j];
      if (bj == 0.0)
        continue;
      if constexpr (keep == Keep::Disjoint) {
        if ((i & j) != 0)
          continue;
      } else if constexpr (keep == Keep::LeftInRight) {
        if ((i & j) != i)
          continue;
      } else if constexpr (keep == Keep::RightInLeft) {
        if ((i & j) != j)
          continue;
      }
      out[i ^ j] += kSigns[i][j] * ai * bj;
    }
  }
  return out;
}

} // namespace

bool Multivector::is_finite() const {
  for (double c : coeffs_)
    if (!std::isfinite(c))
      return false;
  return true;
}

bool Multivector::is_zero() const {
  for (double c : coeffs_)
    if (c != 0.0)
      return false;
  return true;
}

Multivector geometric_product(const Multivector &a, const Multivector &b) {
  return accumulate<Keep::All>(a, b);
}

Multivector outer_product(const Multivector &a, const Multivector &b) {
  return accumulate<Keep::Disjoint>(a, b);
}

Multivector left_contraction(const Multivector &a, const Multivector &b) {
  return accumulate<Keep::LeftInRight>(a, b);
}

Multivector right_contraction(const Multivector &a, const Multivector &b) {
  return accumulate<Keep::RightInLeft>(a, b);
}

double scalar_product(const Multivector &a, const Multivector &b) {
  // Only equal blades contribute to grade 0.
  double sum = 0.0;
  for (unsigned k = 0; k < kBladeCount; ++k)
    sum += kSigns[k][k] * a[k] * b[k];
  return sum;
}

Multivector grade_select(const Multivector &a, int k) {
  if (k < 0 || k > kMaxGrade)
    throw GeometryError(ErrorKind::InvalidArgument,
                        "grade " + std::to_string(k) + " outside 0..5");
  Multivector out;
  for (unsigned m = 0; m < kBladeCount; ++m)
    if (blade_grade(m) == k)
      out[m] = a[m];
  return out;
}

Multivector reverse(const Multivector &a) {
  Multivector out = a;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    const int g = blade_grade(m);
    if (((g * (g - 1) / 2) & 1) != 0)
      out[m] = -out[m];
  }
  return out;
}

double norm(const Multivector &a) {
  double sum = 0.0;
  for (double c : a.coefficients())
    sum += c * c;
  return std::sqrt(sum);
}

bool is_homogeneous(const Multivector &a, int k, double tol) {
  return norm(a - grade_select(a, k)) <= tol * norm(a);
}

Multivector blade_inverse(const Multivector &a, double tol) {
  const Multivector rev = reverse(a);
  const Multivector square = a * rev;
  const double scale = norm(a) * norm(a);
  const double s = square.scalar();
  if (!(std::abs(s) > tol * scale))
    throw GeometryError(ErrorKind::NotInvertible,
                        "a * reverse(a) vanishes (null or zero blade)");
  if (norm(square - Multivector(s)) > tol * scale)
    throw GeometryError(ErrorKind::NotInvertible,
                        "a * reverse(a) is not a scalar (not a versor)");
  return rev / s;
}

} // namespace cga
