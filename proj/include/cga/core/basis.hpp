#pragma once

#include <array>
#include <string>
#include <vector>

#include "cga/core/multivector.hpp"

// Null basis {nb, e1, e2, e3, n} for origin, 3-space and infinity, realized
// on the internal diagonal basis as
//
//   n  = e- + e+        (infinity)
//   nb = (e- - e+) / 2  (origin)
//
// so that n^2 = nb^2 = 0 and n * nb = -1. Every embedded point
// p + p^2/2 n + nb is then null.
namespace cga::basis {

inline constexpr Multivector one = Multivector(1.0);
inline constexpr Multivector e1 = Multivector::blade(kE1);
inline constexpr Multivector e2 = Multivector::blade(kE2);
inline constexpr Multivector e3 = Multivector::blade(kE3);
inline constexpr Multivector e_plus = Multivector::blade(kEPlus);
inline constexpr Multivector e_minus = Multivector::blade(kEMinus);

inline constexpr Multivector n = e_minus + e_plus;
inline constexpr Multivector nbar = 0.5 * (e_minus - e_plus);

// N = n ^ nb = e+ ^ e-, the Minkowski plane of origin and infinity.
inline constexpr Multivector minkowski = Multivector::blade(kEPlus | kEMinus);

// Euclidean pseudoscalar i = e1 e2 e3 and the bivectors i1, i2, i3.
inline constexpr Multivector i3d = Multivector::blade(kE1 | kE2 | kE3);
inline constexpr Multivector e23 = Multivector::blade(kE2 | kE3);
inline constexpr Multivector e31 = -Multivector::blade(kE1 | kE3);
inline constexpr Multivector e12 = Multivector::blade(kE1 | kE2);

} // namespace cga::basis

namespace cga {

// Blade masks over the null basis. Factors of a null blade are always
// ordered e1, e2, e3, n, nb; N is therefore the blade "n^nb".
enum NullGenerator : unsigned {
  kNullE1 = 1u << 0,
  kNullE2 = 1u << 1,
  kNullE3 = 1u << 2,
  kNullInfinity = 1u << 3,
  kNullOrigin = 1u << 4,
};

using NullCoefficients = std::array<double, kBladeCount>;

NullCoefficients to_null_basis(const Multivector &a);
Multivector from_null_basis(const NullCoefficients &coeffs);

// Grade-1 element from coordinates in the order {nb, e1, e2, e3, n}.
Multivector null_vector(double origin, double x, double y, double z,
                        double infinity);

// Outer product of the null-basis generators selected by the mask, as an
// internal multivector.
Multivector null_blade(unsigned null_mask);

// "1", "e1", "e1^e2", "n^nb", ...
std::string null_blade_name(unsigned null_mask);

// Null blade masks sorted by grade, then by name.
const std::vector<unsigned> &canonical_null_order();

// %.9g with negative zero printed as 0.
std::string format_real(double value);

// Canonical text form in null-basis names, e.g. "1 + 2*e1^e2 + 0.5*n^nb".
// Coefficients smaller than tol * (largest coefficient) are dropped.
std::string render(const Multivector &a, double tol = kDefaultTolerance);

} // namespace cga
