#pragma once

#include "cga/core/multivector.hpp"
#include "cga/objects/point.hpp"

namespace cga {

// |V ^ X| <= tol |V| |X|: X lies on the object V.
bool incident(const Multivector &object, const ConformalPoint &point,
              double tol = kDefaultTolerance);

// A = lambda B for some lambda != 0, within tol relative to |A|.
bool same_object(const Multivector &a, const Multivector &b,
                 double tol = kDefaultTolerance);

} // namespace cga
