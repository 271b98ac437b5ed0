#pragma once

#include <array>
#include <bit>
#include <cstddef>

namespace cga {

inline constexpr int kDimension = 5;
inline constexpr std::size_t kBladeCount = std::size_t{1} << kDimension;
inline constexpr int kMaxGrade = kDimension;

// Relative epsilon used for every "is zero" decision unless overridden.
inline constexpr double kDefaultTolerance = 1e-9;

// Internal diagonal basis. Bit k of a blade mask selects generator k.
// Squares: e1, e2, e3, e+ -> +1; e- -> -1.
enum Generator : unsigned {
  kE1 = 1u << 0,
  kE2 = 1u << 1,
  kE3 = 1u << 2,
  kEPlus = 1u << 3,
  kEMinus = 1u << 4,
};

constexpr int blade_grade(unsigned mask) { return std::popcount(mask); }

// Sign of the geometric product of two basis blades (the result blade is
// a ^ b as a mask). Reordering transpositions plus metric squares.
constexpr int blade_product_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned rest = a >> 1; rest != 0; rest >>= 1) {
    swaps += std::popcount(rest & b);
  }
  int sign = (swaps & 1) ? -1 : 1;
  if ((a & b & kEMinus) != 0) {
    sign = -sign;
  }
  return sign;
}

// Dense element of Cl(4,1): one coefficient per basis blade.
class Multivector {
public:
  using Coefficients = std::array<double, kBladeCount>;

  constexpr Multivector() = default;
  constexpr explicit Multivector(double scalar) { coeffs_[0] = scalar; }
  constexpr explicit Multivector(const Coefficients &coeffs)
      : coeffs_(coeffs) {}

  static constexpr Multivector blade(unsigned mask, double weight = 1.0) {
    Multivector out;
    out.coeffs_[mask] = weight;
    return out;
  }

  constexpr double operator[](unsigned mask) const { return coeffs_[mask]; }
  constexpr double &operator[](unsigned mask) { return coeffs_[mask]; }

  constexpr const Coefficients &coefficients() const { return coeffs_; }
  constexpr double scalar() const { return coeffs_[0]; }

  bool is_finite() const;
  bool is_zero() const;

  constexpr Multivector &operator+=(const Multivector &o) {
    for (std::size_t k = 0; k < kBladeCount; ++k)
      coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  constexpr Multivector &operator-=(const Multivector &o) {
    for (std::size_t k = 0; k < kBladeCount; ++k)
      coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  constexpr Multivector &operator*=(double s) {
    for (auto &c : coeffs_)
      c *= s;
    return *this;
  }
  constexpr Multivector &operator/=(double s) {
    for (auto &c : coeffs_)
      c /= s;
    return *this;
  }

  friend constexpr Multivector operator+(Multivector a, const Multivector &b) {
    return a += b;
  }
  friend constexpr Multivector operator-(Multivector a, const Multivector &b) {
    return a -= b;
  }
  friend constexpr Multivector operator-(Multivector a) { return a *= -1.0; }
  friend constexpr Multivector operator*(Multivector a, double s) {
    return a *= s;
  }
  friend constexpr Multivector operator*(double s, Multivector a) {
    return a *= s;
  }
  friend constexpr Multivector operator/(Multivector a, double s) {
    return a /= s;
  }
  friend constexpr Multivector operator+(Multivector a, double s) {
    a.coeffs_[0] += s;
    return a;
  }
  friend constexpr Multivector operator+(double s, Multivector a) {
    a.coeffs_[0] += s;
    return a;
  }
  friend constexpr Multivector operator-(Multivector a, double s) {
    a.coeffs_[0] -= s;
    return a;
  }

  friend constexpr bool operator==(const Multivector &,
                                   const Multivector &) = default;

private:
  Coefficients coeffs_{};
};

Multivector geometric_product(const Multivector &a, const Multivector &b);
Multivector outer_product(const Multivector &a, const Multivector &b);
Multivector left_contraction(const Multivector &a, const Multivector &b);
Multivector right_contraction(const Multivector &a, const Multivector &b);
double scalar_product(const Multivector &a, const Multivector &b);

inline Multivector operator*(const Multivector &a, const Multivector &b) {
  return geometric_product(a, b);
}
// Mind the precedence: ^ binds looser than + and ==. Parenthesize.
inline Multivector operator^(const Multivector &a, const Multivector &b) {
  return outer_product(a, b);
}

// Throws GeometryError(InvalidArgument) for k outside 0..5.
Multivector grade_select(const Multivector &a, int k);
Multivector reverse(const Multivector &a);

// Frobenius norm over the 32 internal coefficients.
double norm(const Multivector &a);

// |a - <a>_k| <= tol * |a|. The zero multivector has every grade.
bool is_homogeneous(const Multivector &a, int k,
                    double tol = kDefaultTolerance);

// a^-1 = reverse(a) / (a reverse(a)). Throws NotInvertible when
// a reverse(a) is not a scalar or its magnitude is below tol * |a|^2.
Multivector blade_inverse(const Multivector &a,
                          double tol = kDefaultTolerance);

} // namespace cga
