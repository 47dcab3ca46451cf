#pragma once

// Closed-form primitives evaluated over a chord: every curve here is a
// function y(x) in the local frame where the chord is the segment [-c, c] of
// the x-axis. Angles are measured from the chord direction; signed curvature
// is positive for counter-clockwise turning when traversed with increasing x.

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <optional>
#include <variant>

#include "spiralbound/extended_real.hpp"

namespace spiralbound {

using Point = Eigen::Vector2d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2;

/// Unit vector (cos phi, sin phi).
inline Point unit(double phi) { return {std::cos(phi), std::sin(phi)}; }

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

/// Rigid frame attached to a chord: origin at the chord midpoint, x-axis along
/// the chord. Endpoints map to (-c, 0) and (c, 0).
class ChordFrame {
 public:
  ChordFrame(const Point& start, const Point& end);
  ChordFrame(const Point& origin, double direction, double half_length);

  Point to_local(const Point& p) const { return rotation_.inverse() * (p - origin_); }
  Point to_global(const Point& p) const { return rotation_ * p + origin_; }
  /// Rotates a direction angle from local to global.
  double angle_to_global(double local_angle) const { return wrap_angle(local_angle + direction_); }

  const Point& origin() const { return origin_; }
  double direction() const { return direction_; }
  double half_length() const { return half_length_; }

 private:
  Point origin_;
  double direction_;
  double half_length_;
  Eigen::Rotation2Dd rotation_;
};

/// Circular arc resting on [-c, c] with start tangent phi relative to the
/// chord; its end tangent is -phi.
class Arc {
 public:
  /// Throws DomainError unless c > 0 and |phi| <= pi/2.
  Arc(double half_chord, double phi);

  double c() const { return c_; }
  double phi() const { return phi_; }

 private:
  double c_;
  double phi_;
};

/// Height of the arc above the chord:
/// A(x; c, phi) = (c^2 - x^2) sin phi / (c cos phi + sqrt(c^2 - x^2 sin^2 phi)).
/// Throws DomainError for |x| > c (1 + 1e-12); abscissae inside that slack
/// are clamped to the chord.
double arc_eval(const Arc& arc, double x);

/// dy/dx of the arc.
double arc_slope(const Arc& arc, double x);

/// Constant signed curvature -sin(phi) / c.
double arc_curvature(const Arc& arc);

/// Member of the short-biarc family B0(x; c, alpha, beta, p): a circular arc
/// of curvature a leaving (-c, 0) with tangent alpha, joined with common
/// tangent to an arc of curvature b reaching (c, 0) with tangent beta.
///
/// Degenerate members (p = 0, p = inf, alpha + beta = 0) collapse onto a
/// single lens arc; `join` is empty for them and `equivalent_arc()` returns it.
struct BiarcSpec {
  enum class Degeneracy {
    none,
    start_impulse,  ///< p = 0: first sub-arc vanishes, curve is A(x; c, -beta)
    end_impulse,    ///< p = inf: second sub-arc vanishes, curve is A(x; c, alpha)
    merged,         ///< alpha + beta = 0: both sub-arcs lie on A(x; c, alpha)
  };

  double c = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  ExtendedReal a;
  ExtendedReal b;
  ExtendedReal p;
  Degeneracy degeneracy = Degeneracy::none;
  std::optional<Point> join;

  double omega() const { return 0.5 * (alpha + beta); }
  bool is_degenerate() const { return degeneracy != Degeneracy::none; }
  /// The single arc a degenerate member collapses onto; empty for regular biarcs.
  std::optional<Arc> equivalent_arc() const;
};

/// Threshold below which |omega|, |ac + sin alpha| or |bc - sin beta| are
/// treated as zero and the degenerate branches apply.
inline constexpr double kDegenerateThreshold = 1e-12;

/// Biarc with curvatures
///   a = -(sin alpha + sin(omega) / p) / c,   b = (sin beta + p sin omega) / c,
/// which makes (ac + sin alpha)(bc - sin beta) + sin^2 omega vanish.
BiarcSpec biarc_from_p(double c, double alpha, double beta, ExtendedReal p);

/// Biarc matching the end tangents and start curvature a (B1). Any infinite a
/// yields the p = 0 member. Throws InfeasibleCurvature when the implied p < 0.
BiarcSpec biarc_from_a(double c, double alpha, double beta, ExtendedReal a);

/// Biarc matching the end tangents and end curvature b (B2). Any infinite b
/// yields the p = inf member; bc = sin beta is the "hidden" p = 0 case.
BiarcSpec biarc_from_b(double c, double alpha, double beta, ExtendedReal b);

/// Tangency residual (ac + sin alpha)(bc - sin beta) + sin^2 omega; NaN when
/// either curvature is infinite.
double biarc_residual(const BiarcSpec& spec);

/// Height of the biarc over the chord at x, |x| <= c.
double biarc_eval(const BiarcSpec& spec, double x);

/// dy/dx of the biarc; at the join the left piece is used.
double biarc_slope(const BiarcSpec& spec, double x);

/// Lower or upper boundary of a region over one chord.
using BoundaryCurve = std::variant<Arc, BiarcSpec>;

/// Degenerate biarcs become their equivalent Arc; regular ones stay biarcs.
BoundaryCurve to_boundary(const BiarcSpec& spec);

double eval(const BoundaryCurve& curve, double x);
double slope(const BoundaryCurve& curve, double x);
double half_chord(const BoundaryCurve& curve);

/// The same geometric curve seen from the reversed chord (x -> -x, y -> -y):
/// arcs flip phi, biarcs swap and negate their end data and invert p.
BoundaryCurve mirrored(const BoundaryCurve& curve);
BiarcSpec mirrored(const BiarcSpec& spec);

/// Reflection about the chord (y -> -y): angles and curvatures change sign,
/// p is kept.
BoundaryCurve reflected(const BoundaryCurve& curve);
BiarcSpec reflected(const BiarcSpec& spec);

}  // namespace spiralbound
