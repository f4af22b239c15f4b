#pragma once

// Umbrella header: skew constacyclic codes over F_{p^m} + v F_{p^m} + v^2 F_{p^m}
// (v^3 = v), their Gray images and the derived CSS quantum codes.

#include "catalog.hpp"
#include "config.hpp"
#include "distance.hpp"
#include "finite_field.hpp"
#include "gray.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"
#include "presets.hpp"
#include "quantum.hpp"
#include "ring.hpp"
#include "skew_poly.hpp"
