#pragma once

#include "cga/objects/circle.hpp"
#include "cga/objects/euclid.hpp"
#include "cga/objects/incidence.hpp"
#include "cga/objects/line.hpp"
#include "cga/objects/pair.hpp"
#include "cga/objects/plane.hpp"
#include "cga/objects/point.hpp"
#include "cga/objects/sphere.hpp"
