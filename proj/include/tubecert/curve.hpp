#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tubecert/types.hpp"

namespace tubecert {

enum class CurveKind { Segment, Arc, Spline };

/// Frenet data of a unit-speed planar curve at one parameter value.
///
/// The normal is always the counterclockwise quarter turn of the tangent,
/// N = (-T.y, T.x), and the signed curvature is kappa = gamma'' . N.
/// tkappa_prime is d/dt [t * kappa(t)]; at junctions of the straight
/// extension it is the one-sided value taken from inside [a, b] and the
/// junction flag is set.
struct Frame {
  double t = 0.0;
  Vec2 point = Vec2::Zero();
  Vec2 tangent = Vec2::Zero();
  Vec2 normal = Vec2::Zero();
  double kappa = 0.0;
  double tkappa_prime = 0.0;
  bool junction = false;
};

/// A simple, unit-speed planar curve on a parameter interval [a, b] with
/// a <= 0 <= b, optionally continued by straight lines with constant
/// tangent on [a - margin, a] and [b, b + margin].
///
/// Construction reparametrizes the natural input (endpoints, angles, or
/// control points) by arclength, so |gamma'(t)| = 1 everywhere, and shifts
/// the interval so that t = 0 sits at the prescribed arclength position
/// (curve midpoint by default). Segments and arcs are evaluated in closed
/// form; splines (natural cubic, chord-length knots) go through a
/// quadrature-based arclength table. Spline curves are C^2 only, which
/// regularity_warning() reports.
///
/// Curves are immutable; copies are cheap and safe to share across threads.
class Curve {
 public:
  /// Straight segment between two points. Rejects |to - from| < 1e-12.
  static Curve segment(const Vec2& from, const Vec2& to,
                       std::optional<double> shift = {});

  /// Circle arc, traversed from angle_start to angle_end (radians,
  /// counterclockwise when increasing). Requires 0 < |sweep| < 2*pi.
  static Curve arc(const Vec2& center, double radius, double angle_start,
                   double angle_end, std::optional<double> shift = {});

  /// Natural cubic spline through at least three interpolation points.
  static Curve spline(const std::vector<Vec2>& points,
                      std::optional<double> shift = {});

  CurveKind kind() const { return kind_; }
  double t_min() const { return a_; }
  double t_max() const { return b_; }
  double length() const { return b_ - a_; }
  double extension() const { return margin_; }
  double t_min_ext() const { return a_ - margin_; }
  double t_max_ext() const { return b_ + margin_; }

  /// Spline curves are C^2, one derivative short of what the analytic
  /// kinds provide; downstream certificates carry this as a warning.
  bool regularity_warning() const { return kind_ == CurveKind::Spline; }

  /// Evaluation on [t_min_ext, t_max_ext]; throws std::out_of_range
  /// beyond a small rounding slack.
  Vec2 point(double t) const;
  Vec2 tangent(double t) const;
  Vec2 normal(double t) const { return rot90(tangent(t)); }
  double curvature(double t) const;

  friend Curve extend(const Curve& curve, double margin);
  friend Curve restrict_to_base(const Curve& curve);
  friend Frame frame_at(const Curve& curve, double t);

 private:
  Curve() = default;
  struct SplineData;
  void check_range(double t) const;
  double clamp_eval(double t) const;

  CurveKind kind_ = CurveKind::Segment;
  double a_ = 0.0;
  double b_ = 0.0;
  double margin_ = 0.0;

  // segment: point at t = a and unit direction
  Vec2 seg_p0_ = Vec2::Zero();
  Vec2 seg_dir_ = Vec2::UnitX();

  // arc: angle at t = a and +-1 traversal orientation
  Vec2 arc_center_ = Vec2::Zero();
  double arc_radius_ = 1.0;
  double arc_phi_a_ = 0.0;
  double arc_orient_ = 1.0;

  std::shared_ptr<const SplineData> spline_;
};

/// Copy of the curve whose admissible interval is [a - margin, b + margin];
/// the continuation is the straight line with tangent gamma'(a), gamma'(b).
/// Curvature is identically zero on the extension pieces.
Curve extend(const Curve& curve, double margin);

/// Drops the extension; evaluation on [a, b] is bit-identical to the input.
Curve restrict_to_base(const Curve& curve);

/// Full Frenet data at t, one-sided at extension junctions (values from
/// inside [a, b] at t = a, b exactly). For splines tkappa_prime uses
/// finite differences of t*kappa(t) with step 1e-5, one-sided near the
/// junctions; analytic kinds use closed forms.
Frame frame_at(const Curve& curve, double t);

}  // namespace tubecert
