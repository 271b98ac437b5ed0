#include "cga/core/basis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cga {
namespace {

constexpr unsigned kEuclidMask = kE1 | kE2 | kE3;

// Masks agree on the Euclidean bits; only the two extra generators mix.
static_assert(unsigned{kNullE1} == unsigned{kE1} && unsigned{kNullE2} == unsigned{kE2} &&
              unsigned{kNullE3} == unsigned{kE3});

} // namespace

NullCoefficients to_null_basis(const Multivector &a) {
  // e+ = n/2 - nb, e- = n/2 + nb, e+^e- = n^nb.
  NullCoefficients out{};
  for (unsigned euclid = 0; euclid <= kEuclidMask; ++euclid) {
    const double scalar = a[euclid];
    const double plus = a[euclid | kEPlus];
    const double minus = a[euclid | kEMinus];
    const double both = a[euclid | kEPlus | kEMinus];
    out[euclid] += scalar;
    out[euclid | kNullInfinity] += 0.5 * (plus + minus);
    out[euclid | kNullOrigin] += minus - plus;
    out[euclid | kNullInfinity | kNullOrigin] += both;
  }
  return out;
}

Multivector from_null_basis(const NullCoefficients &coeffs) {
  // n = e+ + e-, nb = (e- - e+)/2, n^nb = e+^e-.
  Multivector out;
  for (unsigned euclid = 0; euclid <= kEuclidMask; ++euclid) {
    const double scalar = coeffs[euclid];
    const double inf = coeffs[euclid | kNullInfinity];
    const double origin = coeffs[euclid | kNullOrigin];
    const double both = coeffs[euclid | kNullInfinity | kNullOrigin];
    out[euclid] += scalar;
    out[euclid | kEPlus] += inf - 0.5 * origin;
    out[euclid | kEMinus] += inf + 0.5 * origin;
    out[euclid | kEPlus | kEMinus] += both;
  }
  return out;
}

Multivector null_vector(double origin, double x, double y, double z,
                        double infinity) {
  return origin * basis::nbar + x * basis::e1 + y * basis::e2 +
         z * basis::e3 + infinity * basis::n;
}

Multivector null_blade(unsigned null_mask) {
  NullCoefficients coeffs{};
  coeffs[null_mask] = 1.0;
  return from_null_basis(coeffs);
}

std::string null_blade_name(unsigned null_mask) {
  static constexpr const char *kNames[] = {"e1", "e2", "e3", "n", "nb"};
  if (null_mask == 0)
    return "1";
  std::string name;
  for (int bit = 0; bit < kDimension; ++bit) {
    if ((null_mask & (1u << bit)) == 0)
      continue;
    if (!name.empty())
      name += '^';
    name += kNames[bit];
  }
  return name;
}

const std::vector<unsigned> &canonical_null_order() {
  static const std::vector<unsigned> order = [] {
    std::vector<unsigned> masks(kBladeCount);
    for (unsigned m = 0; m < kBladeCount; ++m)
      masks[m] = m;
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
      const int ga = blade_grade(a);
      const int gb = blade_grade(b);
      if (ga != gb)
        return ga < gb;
      return null_blade_name(a) < null_blade_name(b);
    });
    return masks;
  }();
  return order;
}

std::string format_real(double value) {
  if (value == 0.0)
    return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  std::string out(buf);
  if (out == "-0")
    return "0";
  return out;
}

std::string render(const Multivector &a, double tol) {
  const NullCoefficients coeffs = to_null_basis(a);
  double largest = 0.0;
  for (double c : coeffs)
    largest = std::max(largest, std::abs(c));
  if (largest == 0.0)
    return "0";

  std::string out;
  for (unsigned mask : canonical_null_order()) {
    const double c = coeffs[mask];
    if (std::abs(c) <= tol * largest)
      continue;
    const bool negative = c < 0.0;
    std::string magnitude = format_real(std::abs(c));
    std::string term;
    if (mask == 0)
      term = magnitude;
    else if (magnitude == "1")
      term = null_blade_name(mask);
    else
      term = magnitude + "*" + null_blade_name(mask);

    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

} // namespace cga
