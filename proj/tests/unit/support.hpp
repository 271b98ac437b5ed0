#pragma once

#include <doctest.h>

#include <sstream>
#include <string>

#include "cga/core/basis.hpp"
#include "cga/core/multivector.hpp"
#include "cga/objects/euclid.hpp"

namespace cga::test {

inline double distance(const Multivector &a, const Multivector &b) {
  return norm(a - b);
}

inline double distance(const EuclidVector &a, const EuclidVector &b) {
  return norm(a - b);
}

inline double distance(const EuclidBivector &a, const EuclidBivector &b) {
  return norm(a - b);
}

inline EuclidBivector unit(const EuclidBivector &b) {
  return b * (1.0 / norm(b));
}

} // namespace cga::test

namespace doctest {

template <> struct StringMaker<cga::Multivector> {
  static String convert(const cga::Multivector &a) {
    return cga::render(a, 0.0).c_str();
  }
};

template <> struct StringMaker<cga::EuclidVector> {
  static String convert(const cga::EuclidVector &v) {
    std::ostringstream out;
    out << '(' << v.x << ", " << v.y << ", " << v.z << ')';
    return out.str().c_str();
  }
};

} // namespace doctest
