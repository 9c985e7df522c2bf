#include "tubecert/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tubecert/numerics.hpp"

namespace tubecert {

namespace {

constexpr double kFdStep = 1e-5;       // step for t*kappa differentiation
constexpr double kJunctionTol = 1e-5;  // one FD step
constexpr double kMinSpeed = 1e-12;

// Simplicity check: over ns samples of [a, b], every pair separated by at
// least delta in parameter must stay geometrically apart.
void check_simple(const std::vector<Vec2>& pts, const std::vector<double>& ts,
                  double delta, double scale) {
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (ts[j] - ts[i] < delta) continue;
      if ((pts[j] - pts[i]).norm() <= 1e-9 * scale) {
        throw std::invalid_argument(
            "curve is not simple at the sampling resolution");
      }
    }
  }
}

double resolve_shift(std::optional<double> shift, double len) {
  const double s = shift.value_or(0.5 * len);
  if (!(s >= 0.0 && s <= len)) {
    throw std::invalid_argument(
        "shift must lie in [0, length] so that a <= 0 <= b");
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Spline internals
// ---------------------------------------------------------------------------

struct Curve::SplineData {
  std::vector<double> knots;  // chord-length parameters, strictly increasing
  std::vector<Vec2> pts;
  std::vector<Vec2> m2;  // natural second derivatives at knots

  // monotone arclength table over a refinement of the knots
  std::vector<double> tab_u;
  std::vector<double> tab_s;
  double total_len = 0.0;

  int segment_of(double u) const {
    const auto it = std::upper_bound(knots.begin(), knots.end(), u);
    int k = static_cast<int>(it - knots.begin()) - 1;
    k = std::clamp(k, 0, static_cast<int>(knots.size()) - 2);
    return k;
  }

  Vec2 eval(double u, int deriv) const {
    const int k = segment_of(u);
    const double h = knots[k + 1] - knots[k];
    const double A = (knots[k + 1] - u) / h;
    const double B = (u - knots[k]) / h;
    switch (deriv) {
      case 0:
        return A * pts[k] + B * pts[k + 1] +
               ((A * A * A - A) * m2[k] + (B * B * B - B) * m2[k + 1]) *
                   (h * h / 6.0);
      case 1:
        return (pts[k + 1] - pts[k]) / h +
               (-(3.0 * A * A - 1.0) * m2[k] + (3.0 * B * B - 1.0) * m2[k + 1]) *
                   (h / 6.0);
      case 2:
        return A * m2[k] + B * m2[k + 1];
      default:
        return (m2[k + 1] - m2[k]) / h;
    }
  }

  double speed(double u) const { return eval(u, 1).norm(); }

  double s_of_u(double u) const {
    const auto it = std::upper_bound(tab_u.begin(), tab_u.end(), u);
    int k = static_cast<int>(it - tab_u.begin()) - 1;
    k = std::clamp(k, 0, static_cast<int>(tab_u.size()) - 2);
    const double tol = 1e-13 * (1.0 + total_len);
    return tab_s[k] + adaptive_gauss([this](double x) { return speed(x); },
                                     tab_u[k], u, tol);
  }

  double u_of_s(double s) const {
    s = std::clamp(s, 0.0, total_len);
    const auto it = std::upper_bound(tab_s.begin(), tab_s.end(), s);
    int k = static_cast<int>(it - tab_s.begin()) - 1;
    k = std::clamp(k, 0, static_cast<int>(tab_s.size()) - 2);
    double lo = tab_u[k], hi = tab_u[k + 1];
    const double frac = (s - tab_s[k]) / std::max(tab_s[k + 1] - tab_s[k],
                                                  1e-300);
    double u = lo + frac * (hi - lo);
    const double tol = 1e-13 * (1.0 + total_len);
    for (int iter = 0; iter < 12; ++iter) {
      const double res = s_of_u(u) - s;
      if (std::abs(res) <= tol) break;
      if (res > 0.0) {
        hi = u;
      } else {
        lo = u;
      }
      double step = res / std::max(speed(u), kMinSpeed);
      double next = u - step;
      if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
      u = next;
    }
    return u;
  }
};

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

Curve Curve::segment(const Vec2& from, const Vec2& to,
                     std::optional<double> shift) {
  if (!from.allFinite() || !to.allFinite()) {
    throw std::invalid_argument("segment endpoints must be finite");
  }
  const double len = (to - from).norm();
  if (len < kMinSpeed) {
    throw std::invalid_argument("degenerate parametrization: |gamma'| < 1e-12");
  }
  Curve c;
  c.kind_ = CurveKind::Segment;
  const double s0 = resolve_shift(shift, len);
  c.a_ = -s0;
  c.b_ = len - s0;
  c.seg_p0_ = from;
  c.seg_dir_ = (to - from) / len;
  return c;
}

Curve Curve::arc(const Vec2& center, double radius, double angle_start,
                 double angle_end, std::optional<double> shift) {
  if (!center.allFinite() || !std::isfinite(radius) ||
      !std::isfinite(angle_start) || !std::isfinite(angle_end)) {
    throw std::invalid_argument("arc parameters must be finite");
  }
  if (radius <= 0.0) throw std::invalid_argument("arc radius must be positive");
  const double sweep = angle_end - angle_start;
  if (std::abs(sweep) < kMinSpeed) {
    throw std::invalid_argument("degenerate parametrization: |gamma'| < 1e-12");
  }
  if (std::abs(sweep) >= 2.0 * std::numbers::pi) {
    throw std::invalid_argument("arc sweep must stay below a full turn");
  }
  Curve c;
  c.kind_ = CurveKind::Arc;
  const double len = radius * std::abs(sweep);
  const double s0 = resolve_shift(shift, len);
  c.a_ = -s0;
  c.b_ = len - s0;
  c.arc_center_ = center;
  c.arc_radius_ = radius;
  c.arc_phi_a_ = angle_start;
  c.arc_orient_ = sweep > 0.0 ? 1.0 : -1.0;
  return c;
}

Curve Curve::spline(const std::vector<Vec2>& points,
                    std::optional<double> shift) {
  const int m = static_cast<int>(points.size());
  if (m < 3) {
    throw std::invalid_argument("spline needs at least three points");
  }
  for (const Vec2& p : points) {
    if (!p.allFinite()) {
      throw std::invalid_argument("spline points must be finite");
    }
  }

  auto data = std::make_shared<SplineData>();
  data->pts = points;
  data->knots.resize(points.size());
  data->knots[0] = 0.0;
  for (int i = 1; i < m; ++i) {
    const double chord = (points[i] - points[i - 1]).norm();
    if (chord < kMinSpeed) {
      throw std::invalid_argument(
          "degenerate parametrization: |gamma'| < 1e-12");
    }
    data->knots[i] = data->knots[i - 1] + chord;
  }

  // natural cubic spline: tridiagonal system for the second derivatives
  data->m2.assign(points.size(), Vec2::Zero());
  const int interior = m - 2;
  std::vector<double> diag(interior), sub(interior), sup(interior);
  std::vector<Vec2> rhs(interior);
  for (int i = 1; i <= interior; ++i) {
    const double h0 = data->knots[i] - data->knots[i - 1];
    const double h1 = data->knots[i + 1] - data->knots[i];
    sub[i - 1] = h0 / 6.0;
    diag[i - 1] = (h0 + h1) / 3.0;
    sup[i - 1] = h1 / 6.0;
    rhs[i - 1] = (points[i + 1] - points[i]) / h1 -
                 (points[i] - points[i - 1]) / h0;
  }
  // Thomas algorithm
  for (int i = 1; i < interior; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  if (interior > 0) {
    data->m2[interior] = rhs[interior - 1] / diag[interior - 1];
    for (int i = interior - 1; i >= 1; --i) {
      data->m2[i] = (rhs[i - 1] - sup[i - 1] * data->m2[i + 1]) / diag[i - 1];
    }
  }

  // arclength table: refine each knot interval, accumulate with quadrature
  const int sub_per_knot = 24;
  data->tab_u.push_back(data->knots.front());
  data->tab_s.push_back(0.0);
  const double qtol = 1e-13;
  for (int k = 0; k + 1 < m; ++k) {
    const double u0 = data->knots[k];
    const double u1 = data->knots[k + 1];
    for (int j = 1; j <= sub_per_knot; ++j) {
      const double ua = u0 + (u1 - u0) * (j - 1) / sub_per_knot;
      const double ub = u0 + (u1 - u0) * j / sub_per_knot;
      if (data->speed(0.5 * (ua + ub)) < kMinSpeed) {
        throw std::invalid_argument(
            "degenerate parametrization: |gamma'| < 1e-12");
      }
      const double ds = adaptive_gauss(
          [&data](double x) { return data->speed(x); }, ua, ub,
          qtol * (ub - ua + 1.0));
      data->tab_u.push_back(ub);
      data->tab_s.push_back(data->tab_s.back() + ds);
    }
  }
  data->total_len = data->tab_s.back();

  Curve c;
  c.kind_ = CurveKind::Spline;
  const double s0 = resolve_shift(shift, data->total_len);
  c.a_ = -s0;
  c.b_ = data->total_len - s0;
  c.spline_ = std::move(data);

  // simplicity at sampling resolution
  const int ns = 256;
  std::vector<Vec2> samples;
  std::vector<double> ts;
  samples.reserve(ns);
  ts.reserve(ns);
  for (int i = 0; i < ns; ++i) {
    const double t = c.a_ + c.length() * i / (ns - 1);
    ts.push_back(t);
    samples.push_back(c.point(t));
  }
  check_simple(samples, ts, c.length() / 64.0, c.length());
  return c;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

void Curve::check_range(double t) const {
  const double slack = 1e-9 * std::max(1.0, length());
  if (t < t_min_ext() - slack || t > t_max_ext() + slack) {
    throw std::out_of_range("parameter outside the (extended) curve interval");
  }
}

double Curve::clamp_eval(double t) const {
  return std::clamp(t, t_min_ext(), t_max_ext());
}

Vec2 Curve::point(double t) const {
  check_range(t);
  t = clamp_eval(t);
  if (t < a_) return point(a_) + (t - a_) * tangent(a_);
  if (t > b_) return point(b_) + (t - b_) * tangent(b_);
  switch (kind_) {
    case CurveKind::Segment:
      return seg_p0_ + (t - a_) * seg_dir_;
    case CurveKind::Arc: {
      const double phi = arc_phi_a_ + arc_orient_ * (t - a_) / arc_radius_;
      return arc_center_ + arc_radius_ * Vec2(std::cos(phi), std::sin(phi));
    }
    case CurveKind::Spline:
      return spline_->eval(spline_->u_of_s(t - a_), 0);
  }
  return Vec2::Zero();
}

Vec2 Curve::tangent(double t) const {
  check_range(t);
  t = clamp_eval(t);
  const double tc = std::clamp(t, a_, b_);
  switch (kind_) {
    case CurveKind::Segment:
      return seg_dir_;
    case CurveKind::Arc: {
      const double phi = arc_phi_a_ + arc_orient_ * (tc - a_) / arc_radius_;
      return arc_orient_ * Vec2(-std::sin(phi), std::cos(phi));
    }
    case CurveKind::Spline: {
      const Vec2 d1 = spline_->eval(spline_->u_of_s(tc - a_), 1);
      return d1 / d1.norm();
    }
  }
  return Vec2::UnitX();
}

double Curve::curvature(double t) const {
  check_range(t);
  t = clamp_eval(t);
  if (t < a_ || t > b_) return 0.0;
  switch (kind_) {
    case CurveKind::Segment:
      return 0.0;
    case CurveKind::Arc:
      return arc_orient_ / arc_radius_;
    case CurveKind::Spline: {
      const double u = spline_->u_of_s(t - a_);
      const Vec2 d1 = spline_->eval(u, 1);
      const Vec2 d2 = spline_->eval(u, 2);
      const double q = d1.norm();
      return cross2(d1, d2) / (q * q * q);
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Extension and frames
// ---------------------------------------------------------------------------

Curve extend(const Curve& curve, double margin) {
  if (!(margin > 0.0)) {
    throw std::invalid_argument("extension margin must be positive");
  }
  Curve out = curve;
  out.margin_ = margin;
  return out;
}

Curve restrict_to_base(const Curve& curve) {
  Curve out = curve;
  out.margin_ = 0.0;
  return out;
}

Frame frame_at(const Curve& curve, double t) {
  curve.check_range(t);
  t = curve.clamp_eval(t);
  Frame f;
  f.t = t;
  f.point = curve.point(t);
  f.tangent = curve.tangent(t);
  f.normal = rot90(f.tangent);
  f.kappa = curve.curvature(t);

  const double a = curve.t_min();
  const double b = curve.t_max();
  const double jt = kJunctionTol * 1.0000001;
  f.junction = std::abs(t - a) <= jt || std::abs(t - b) <= jt;
  if (curve.extension() > 0.0) {
    f.junction = f.junction || std::abs(t - curve.t_min_ext()) <= jt ||
                 std::abs(t - curve.t_max_ext()) <= jt;
  }

  if (t < a || t > b) {
    f.tkappa_prime = 0.0;  // straight continuation
    return f;
  }

  switch (curve.kind()) {
    case CurveKind::Segment:
      f.tkappa_prime = 0.0;
      break;
    case CurveKind::Arc:
      // t*kappa has constant derivative kappa inside the arc
      f.tkappa_prime = f.kappa;
      break;
    case CurveKind::Spline: {
      const double h = kFdStep;
      auto g = [&curve](double tau) { return tau * curve.curvature(tau); };
      if (t - h >= a && t + h <= b) {
        f.tkappa_prime = (g(t + h) - g(t - h)) / (2.0 * h);
      } else if (t + 2.0 * h <= b) {
        f.tkappa_prime = (-3.0 * g(t) + 4.0 * g(t + h) - g(t + 2.0 * h)) /
                         (2.0 * h);
      } else if (t - 2.0 * h >= a) {
        f.tkappa_prime = (3.0 * g(t) - 4.0 * g(t - h) + g(t - 2.0 * h)) /
                         (2.0 * h);
      } else {
        f.tkappa_prime = (g(b) - g(a)) / (b - a);
      }
      break;
    }
  }
  return f;
}

}  // namespace tubecert
