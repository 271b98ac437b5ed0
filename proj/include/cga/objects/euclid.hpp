#pragma once

#include <cmath>

#include "cga/core/multivector.hpp"

namespace cga {

// Euclidean 3-vector p1 e1 + p2 e2 + p3 e3.
struct EuclidVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr EuclidVector &operator+=(const EuclidVector &o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr EuclidVector &operator-=(const EuclidVector &o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr EuclidVector &operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr EuclidVector operator+(EuclidVector a,
                                          const EuclidVector &b) {
    return a += b;
  }
  friend constexpr EuclidVector operator-(EuclidVector a,
                                          const EuclidVector &b) {
    return a -= b;
  }
  friend constexpr EuclidVector operator-(EuclidVector a) { return a *= -1; }
  friend constexpr EuclidVector operator*(EuclidVector a, double s) {
    return a *= s;
  }
  friend constexpr EuclidVector operator*(double s, EuclidVector a) {
    return a *= s;
  }
  friend constexpr EuclidVector operator/(EuclidVector a, double s) {
    return a *= 1.0 / s;
  }
  friend constexpr bool operator==(const EuclidVector &,
                                   const EuclidVector &) = default;
};

// Euclidean bivector on {i1 = e2e3, i2 = e3e1, i3 = e1e2}.
struct EuclidBivector {
  double e23 = 0.0;
  double e31 = 0.0;
  double e12 = 0.0;

  friend constexpr EuclidBivector operator*(EuclidBivector b, double s) {
    return {b.e23 * s, b.e31 * s, b.e12 * s};
  }
  friend constexpr EuclidBivector operator*(double s, EuclidBivector b) {
    return b * s;
  }
  friend constexpr EuclidBivector operator+(EuclidBivector a,
                                            const EuclidBivector &b) {
    return {a.e23 + b.e23, a.e31 + b.e31, a.e12 + b.e12};
  }
  friend constexpr EuclidBivector operator-(EuclidBivector a,
                                            const EuclidBivector &b) {
    return {a.e23 - b.e23, a.e31 - b.e31, a.e12 - b.e12};
  }
  friend constexpr bool operator==(const EuclidBivector &,
                                   const EuclidBivector &) = default;
};

constexpr double dot(const EuclidVector &a, const EuclidVector &b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr EuclidVector cross(const EuclidVector &a, const EuclidVector &b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline double norm(const EuclidVector &a) { return std::sqrt(dot(a, a)); }
inline double norm(const EuclidBivector &b) {
  return std::sqrt(b.e23 * b.e23 + b.e31 * b.e31 + b.e12 * b.e12);
}

inline bool is_finite(const EuclidVector &a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// a ^ b, component-wise (the bivector dual to a x b).
constexpr EuclidBivector wedge(const EuclidVector &a, const EuclidVector &b) {
  const EuclidVector c = cross(a, b);
  return {c.x, c.y, c.z};
}

// Unit normal of the plane a bivector spans (a ^ b -> a x b / |a x b|).
inline EuclidVector dual_normal(const EuclidBivector &b) {
  return EuclidVector{b.e23, b.e31, b.e12} / norm(b);
}

Multivector to_multivector(const EuclidVector &v);
Multivector to_multivector(const EuclidBivector &b);

// Reads the e1, e2, e3 (resp. e23, e31, e12) coefficients; other blades are
// ignored.
EuclidVector euclid_vector_part(const Multivector &a);
EuclidBivector euclid_bivector_part(const Multivector &a);

} // namespace cga
