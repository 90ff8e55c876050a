#pragma once

#include <cmath>

#include "geodome/sphgeo.hpp"

namespace geodome {

// Angles of the pentagonal tiling, as exact multiples of pi.
inline constexpr double kAngle30 = kPi / 6.0;
inline constexpr double kAngle36 = kPi / 5.0;
inline constexpr double kAngle72 = 2.0 * kPi / 5.0;

/// Sides of the right spherical triangle with angles 36°, 60°, 90° that is
/// half of one 72°-60°-60° triangle of the projected dodecahedron.
///   a: leg from the pentagon center to the edge midpoint (along the
///      symmetry axis), cos a = 1 / (2 sin 36°)
///   b: leg along the pentagon edge (half the edge), cos b = cos 36° / (sqrt(3)/2)
///   c: hypotenuse, center to pentagon corner, cos c = cot 36° / sqrt(3)
struct BaseTriangleConstants {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

inline const BaseTriangleConstants& base_triangle() {
  static const BaseTriangleConstants k = [] {
    const double s36 = std::sin(kAngle36);
    const double c36 = std::cos(kAngle36);
    BaseTriangleConstants t;
    t.a = std::acos(1.0 / (2.0 * s36));
    t.b = std::acos(c36 / (std::sqrt(3.0) / 2.0));
    t.c = std::acos(c36 / s36 / std::sqrt(3.0));
    return t;
  }();
  return k;
}

}  // namespace geodome
