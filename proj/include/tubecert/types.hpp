#pragma once

#include <Eigen/Core>

namespace tubecert {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using VecX = Eigen::VectorXd;

/// Counterclockwise quarter turn.
inline Vec2 rot90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

/// Planar cross product a.x*b.y - a.y*b.x.
inline double cross2(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

}  // namespace tubecert
