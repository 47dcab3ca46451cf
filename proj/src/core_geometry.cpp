#include "spiralbound/core_geometry.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "spiralbound/errors.hpp"

namespace spiralbound {

namespace {

constexpr double kAngleSlack = 1e-12;
constexpr double kAbscissaSlack = 1e-12;

void check_half_chord(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("half-chord must be positive and finite, got " + std::to_string(c));
  }
}

double checked_angle(double angle, const char* name) {
  if (!(std::abs(angle) <= kHalfPi + kAngleSlack)) {
    std::ostringstream os;
    os << name << " = " << angle << " outside [-pi/2, pi/2]";
    throw DomainError(os.str());
  }
  return std::clamp(angle, -kHalfPi, kHalfPi);
}

double clamped_abscissa(double x, double c) {
  if (!(std::abs(x) <= c * (1.0 + kAbscissaSlack))) {
    std::ostringstream os;
    os << "abscissa " << x << " outside chord [-" << c << ", " << c << "]";
    throw DomainError(os.str());
  }
  return std::clamp(x, -c, c);
}

// Height reached by a circle leaving a point on the axis with tangent angle t
// and curvature k, after moving dx along the axis (dx may be negative).
// Written without dividing by k so straight pieces need no special case.
double piece_height(double dx, double t, double k) {
  const double sin_t = std::sin(t);
  const double sin_u = std::clamp(sin_t + k * dx, -1.0, 1.0);
  const double cos_u = std::sqrt(1.0 - sin_u * sin_u);
  const double den = std::cos(t) + cos_u;
  if (den <= 0.0) return 0.0;
  return dx * (sin_t + sin_u) / den;
}

double piece_slope(double dx, double t, double k) {
  const double sin_u = std::clamp(std::sin(t) + k * dx, -1.0, 1.0);
  return sin_u / std::sqrt(std::max(1.0 - sin_u * sin_u, 1e-300));
}

ExtendedReal reciprocal(const ExtendedReal& p) {
  if (!p.is_finite()) return ExtendedReal(0.0);
  if (p.value() == 0.0) return ExtendedReal::pos_inf();
  return ExtendedReal(1.0 / p.value());
}

// Abscissa of the join, c (p^2 - 1) / (p^2 + 2 p cos((alpha - beta)/2) + 1).
double join_abscissa(double c, double alpha, double beta, double p) {
  const double cos_j = std::cos(0.5 * (alpha - beta));
  if (p <= 1.0) return c * (p * p - 1.0) / (p * p + 2.0 * p * cos_j + 1.0);
  const double r = 1.0 / p;
  return c * (1.0 - r * r) / (1.0 + 2.0 * r * cos_j + r * r);
}

}  // namespace

double wrap_angle(double angle) {
  double w = std::remainder(angle, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

ChordFrame::ChordFrame(const Point& start, const Point& end)
    : origin_(0.5 * (start + end)),
      direction_(std::atan2(end.y() - start.y(), end.x() - start.x())),
      half_length_(0.5 * (end - start).norm()),
      rotation_(direction_) {
  check_half_chord(half_length_);
}

ChordFrame::ChordFrame(const Point& origin, double direction, double half_length)
    : origin_(origin), direction_(direction), half_length_(half_length), rotation_(direction) {
  check_half_chord(half_length_);
}

Arc::Arc(double half_chord, double phi) : c_(half_chord), phi_(phi) {
  check_half_chord(c_);
  phi_ = checked_angle(phi, "arc tangent angle");
}

double arc_eval(const Arc& arc, double x) {
  const double c = arc.c();
  x = clamped_abscissa(x, c);
  const double s = std::sin(arc.phi());
  const double root = std::sqrt(std::max(c * c - x * x * s * s, 0.0));
  const double den = c * std::cos(arc.phi()) + root;
  if (den <= 0.0) return 0.0;  // |phi| = pi/2 at an endpoint
  return (c * c - x * x) * s / den;
}

double arc_slope(const Arc& arc, double x) {
  const double c = arc.c();
  x = clamped_abscissa(x, c);
  const double s = std::sin(arc.phi());
  const double root = std::sqrt(std::max(c * c - x * x * s * s, 1e-300));
  return -x * s / root;
}

double arc_curvature(const Arc& arc) { return -std::sin(arc.phi()) / arc.c(); }

std::optional<Arc> BiarcSpec::equivalent_arc() const {
  switch (degeneracy) {
    case Degeneracy::start_impulse: return Arc(c, -beta);
    case Degeneracy::end_impulse:
    case Degeneracy::merged: return Arc(c, alpha);
    default: return std::nullopt;
  }
}

BiarcSpec biarc_from_p(double c, double alpha, double beta, ExtendedReal p) {
  check_half_chord(c);
  BiarcSpec spec;
  spec.c = c;
  spec.alpha = checked_angle(alpha, "biarc start angle");
  spec.beta = checked_angle(beta, "biarc end angle");
  if (p.is_neg_inf() || (p.is_finite() && !(p.value() >= 0.0))) {
    throw DomainError("biarc family parameter p must lie in [0, inf], got " + p.to_string());
  }
  spec.p = p;

  const double omega = spec.omega();
  const double sin_a = std::sin(spec.alpha);
  const double sin_b = std::sin(spec.beta);
  const double sin_w = std::sin(omega);

  if (std::abs(omega) < kDegenerateThreshold) {
    spec.degeneracy = BiarcSpec::Degeneracy::merged;
    spec.a = spec.b = ExtendedReal(-sin_a / c);
    return spec;
  }
  if (p.is_finite() && p.value() == 0.0) {
    spec.degeneracy = BiarcSpec::Degeneracy::start_impulse;
    spec.a = omega > 0 ? ExtendedReal::neg_inf() : ExtendedReal::pos_inf();
    spec.b = ExtendedReal(sin_b / c);
    return spec;
  }
  if (p.is_pos_inf()) {
    spec.degeneracy = BiarcSpec::Degeneracy::end_impulse;
    spec.a = ExtendedReal(-sin_a / c);
    spec.b = omega > 0 ? ExtendedReal::pos_inf() : ExtendedReal::neg_inf();
    return spec;
  }

  const double pv = p.value();
  spec.a = ExtendedReal(-(sin_a + sin_w / pv) / c);
  spec.b = ExtendedReal((sin_b + pv * sin_w) / c);
  const double jx = join_abscissa(c, spec.alpha, spec.beta, pv);
  spec.join = Point(jx, piece_height(jx + c, spec.alpha, spec.a.value()));
  return spec;
}

BiarcSpec biarc_from_a(double c, double alpha, double beta, ExtendedReal a) {
  check_half_chord(c);
  const double al = checked_angle(alpha, "biarc start angle");
  const double be = checked_angle(beta, "biarc end angle");
  const double omega = 0.5 * (al + be);
  if (std::abs(omega) < kDegenerateThreshold) return biarc_from_p(c, al, be, ExtendedReal(0.0));
  if (!a.is_finite()) return biarc_from_p(c, al, be, ExtendedReal(0.0));

  const double den = a.value() * c + std::sin(al);
  if (std::abs(den) < kDegenerateThreshold) return biarc_from_p(c, al, be, ExtendedReal::pos_inf());
  const double p = -std::sin(omega) / den;
  if (p < 0.0) {
    std::ostringstream os;
    os << "start curvature " << a.value() << " admits no biarc with alpha=" << al << ", beta=" << be
       << " (p = " << p << " < 0)";
    throw InfeasibleCurvature(os.str());
  }
  BiarcSpec spec = biarc_from_p(c, al, be, ExtendedReal(p));
  if (!spec.is_degenerate()) spec.a = a;
  return spec;
}

BiarcSpec biarc_from_b(double c, double alpha, double beta, ExtendedReal b) {
  check_half_chord(c);
  const double al = checked_angle(alpha, "biarc start angle");
  const double be = checked_angle(beta, "biarc end angle");
  const double omega = 0.5 * (al + be);
  if (std::abs(omega) < kDegenerateThreshold) return biarc_from_p(c, al, be, ExtendedReal::pos_inf());
  if (!b.is_finite()) return biarc_from_p(c, al, be, ExtendedReal::pos_inf());

  const double num = b.value() * c - std::sin(be);
  // bc = sin(beta): a biarc that looks regular but has p = 0.
  if (std::abs(num) < kDegenerateThreshold) return biarc_from_p(c, al, be, ExtendedReal(0.0));
  const double p = num / std::sin(omega);
  if (p < 0.0) {
    std::ostringstream os;
    os << "end curvature " << b.value() << " admits no biarc with alpha=" << al << ", beta=" << be
       << " (p = " << p << " < 0)";
    throw InfeasibleCurvature(os.str());
  }
  BiarcSpec spec = biarc_from_p(c, al, be, ExtendedReal(p));
  if (!spec.is_degenerate()) spec.b = b;
  return spec;
}

double biarc_residual(const BiarcSpec& spec) {
  if (!spec.a.is_finite() || !spec.b.is_finite()) return std::nan("");
  const double s = std::sin(spec.omega());
  return (spec.a.value() * spec.c + std::sin(spec.alpha)) * (spec.b.value() * spec.c - std::sin(spec.beta)) +
         s * s;
}

double biarc_eval(const BiarcSpec& spec, double x) {
  if (auto arc = spec.equivalent_arc()) return arc_eval(*arc, x);
  x = clamped_abscissa(x, spec.c);
  if (x <= spec.join->x()) return piece_height(x + spec.c, spec.alpha, spec.a.value());
  return piece_height(x - spec.c, spec.beta, spec.b.value());
}

double biarc_slope(const BiarcSpec& spec, double x) {
  if (auto arc = spec.equivalent_arc()) return arc_slope(*arc, x);
  x = clamped_abscissa(x, spec.c);
  if (x <= spec.join->x()) return piece_slope(x + spec.c, spec.alpha, spec.a.value());
  return piece_slope(x - spec.c, spec.beta, spec.b.value());
}

BoundaryCurve to_boundary(const BiarcSpec& spec) {
  if (auto arc = spec.equivalent_arc()) return *arc;
  return spec;
}

double eval(const BoundaryCurve& curve, double x) {
  return std::visit(
      [x](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, Arc>) {
          return arc_eval(c, x);
        } else {
          return biarc_eval(c, x);
        }
      },
      curve);
}

double slope(const BoundaryCurve& curve, double x) {
  return std::visit(
      [x](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, Arc>) {
          return arc_slope(c, x);
        } else {
          return biarc_slope(c, x);
        }
      },
      curve);
}

double half_chord(const BoundaryCurve& curve) {
  return std::visit(
      [](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, Arc>) {
          return c.c();
        } else {
          return c.c;
        }
      },
      curve);
}

BiarcSpec mirrored(const BiarcSpec& spec) {
  BiarcSpec m;
  m.c = spec.c;
  m.alpha = spec.beta;
  m.beta = spec.alpha;
  m.a = -spec.b;
  m.b = -spec.a;
  m.p = reciprocal(spec.p);
  switch (spec.degeneracy) {
    case BiarcSpec::Degeneracy::start_impulse: m.degeneracy = BiarcSpec::Degeneracy::end_impulse; break;
    case BiarcSpec::Degeneracy::end_impulse: m.degeneracy = BiarcSpec::Degeneracy::start_impulse; break;
    default: m.degeneracy = spec.degeneracy;
  }
  if (spec.join) m.join = Point(-spec.join->x(), -spec.join->y());
  return m;
}

BoundaryCurve mirrored(const BoundaryCurve& curve) {
  if (const auto* arc = std::get_if<Arc>(&curve)) return Arc(arc->c(), -arc->phi());
  return mirrored(std::get<BiarcSpec>(curve));
}

BiarcSpec reflected(const BiarcSpec& spec) {
  BiarcSpec r = spec;
  r.alpha = -spec.alpha;
  r.beta = -spec.beta;
  r.a = -spec.a;
  r.b = -spec.b;
  if (spec.join) r.join = Point(spec.join->x(), -spec.join->y());
  return r;
}

BoundaryCurve reflected(const BoundaryCurve& curve) {
  if (const auto* arc = std::get_if<Arc>(&curve)) return Arc(arc->c(), -arc->phi());
  return reflected(std::get<BiarcSpec>(curve));
}

}  // namespace spiralbound
