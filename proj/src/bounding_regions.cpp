#include "spiralbound/bounding_regions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "spiralbound/errors.hpp"

namespace spiralbound {

namespace {

void require_admissible(const DiscreteAnalysis& analysis) {
  const auto& cls = analysis.classification;
  if (cls.kind == Classification::Kind::inadmissible) {
    const auto& v = cls.violations.front();
    throw InadmissibleData("inadmissible data, " + v.describe(), v.node);
  }
}

void require_spiral(const DiscreteAnalysis& analysis, Grade grade) {
  require_admissible(analysis);
  const auto& cls = analysis.classification;
  if (!cls.is_spiral()) {
    std::ostringstream os;
    os << "grade '" << to_string(grade) << "' requires spiral data, but 3-point curvature has "
       << cls.vertices.size() << " extrema (first at node " << cls.vertices.front().node << ")";
    throw InadmissibleData(os.str(), cls.vertices.front().node);
  }
}

double estimate_width(const DiscreteAnalysis& analysis, int j) {
  const int n = static_cast<int>(analysis.nodes.size());
  const double c = analysis.chords[j].half_length;
  const double qs = analysis.nodes[static_cast<std::size_t>(j)].q;
  const double qe = analysis.nodes[static_cast<std::size_t>((j + 1) % n)].q;
  return 0.5 * c * c * std::abs(qs - qe);
}

double sampled_width(const BoundaryCurve& lower, const BoundaryCurve& upper) {
  const double c = half_chord(lower);
  double w = 0.0;
  for (int k = 0; k < kWidthSamples; ++k) {
    const double x = -c + 2.0 * c * k / (kWidthSamples - 1);
    w = std::max(w, eval(upper, x) - eval(lower, x));
  }
  return w;
}

double lens_width(const Arc& lower, const Arc& upper) {
  return upper.c() * std::abs(std::tan(0.5 * upper.phi()) - std::tan(0.5 * lower.phi()));
}

// The gap between two arcs on one chord peaks at the midpoint, so lens pairs
// get the closed form at any grade.
double chord_width(const BoundaryCurve& lower, const BoundaryCurve& upper) {
  const auto* lo = std::get_if<Arc>(&lower);
  const auto* hi = std::get_if<Arc>(&upper);
  if (lo && hi) return lens_width(*lo, *hi);
  return sampled_width(lower, upper);
}

// Orders the pair by their heights at the chord midpoint.
RegionChord make_chord(const ChordFrame& frame, BoundaryCurve first, BoundaryCurve second,
                       double estimate) {
  if (eval(first, 0.0) > eval(second, 0.0)) std::swap(first, second);
  RegionChord rc{frame, std::move(first), std::move(second), 0.0, estimate};
  rc.width = chord_width(rc.lower, rc.upper);
  return rc;
}

Arc checked_arc(double c, double phi, int chord) {
  try {
    return Arc(c, phi);
  } catch (const DomainError& e) {
    throw InadmissibleData("chord " + std::to_string(chord) + ": " + e.what() + " (data too sparse near a vertex)",
                           chord);
  }
}

void finish(Region& region) {
  region.width = 0.0;
  for (const auto& ch : region.chords) region.width = std::max(region.width, ch.width);
}

double curvature_tolerance(const DiscreteAnalysis& analysis) {
  double qmax = 0.0, cmax = 0.0;
  for (const auto& node : analysis.nodes) qmax = std::max(qmax, std::abs(node.q));
  for (const auto& ch : analysis.chords.real()) cmax = std::max(cmax, ch.half_length);
  return 1e-9 * std::max(qmax, 1.0 / cmax);
}

void apply_overrides(CurvatureRanges& ranges, std::span<const CurvatureOverride> overrides, double tol) {
  const int n = static_cast<int>(ranges.lower.size());
  for (const auto& o : overrides) {
    if (o.node < 0 || o.node >= n) {
      throw InputError("curvature override references node " + std::to_string(o.node) + ", data has " +
                       std::to_string(n) + " nodes");
    }
    auto& lo = ranges.lower[static_cast<std::size_t>(o.node)];
    auto& hi = ranges.upper[static_cast<std::size_t>(o.node)];
    if (o.lower) {
      if (ExtendedReal(*o.lower - tol) > hi) {
        std::ostringstream os;
        os << "node " << o.node << ": curvature lower bound " << *o.lower << " exceeds computed upper bound "
           << hi.to_string();
        throw InfeasibleCurvature(os.str(), o.node);
      }
      lo = max(lo, ExtendedReal(*o.lower));
    }
    if (o.upper) {
      if (ExtendedReal(*o.upper + tol) < lo) {
        std::ostringstream os;
        os << "node " << o.node << ": curvature upper bound " << *o.upper << " is below computed lower bound "
           << lo.to_string();
        throw InfeasibleCurvature(os.str(), o.node);
      }
      hi = min(hi, ExtendedReal(*o.upper));
    }
  }
}

void check_nonempty(const CurvatureRanges& ranges, double tol) {
  for (std::size_t i = 0; i < ranges.lower.size(); ++i) {
    const auto& lo = ranges.lower[i];
    const auto& hi = ranges.upper[i];
    if (lo.is_finite() && hi.is_finite() && lo.value() > hi.value() + tol) {
      std::ostringstream os;
      os << "node " << i << ": curvature range is empty [" << lo.value() << ", " << hi.value()
         << "], no spiral matches the data";
      throw InfeasibleCurvature(os.str(), static_cast<int>(i));
    }
  }
}

CurvatureRanges reflected(const CurvatureRanges& ranges) {
  CurvatureRanges r;
  for (std::size_t i = 0; i < ranges.lower.size(); ++i) {
    r.lower.push_back(-ranges.upper[i]);
    r.upper.push_back(-ranges.lower[i]);
  }
  return r;
}

// Region for increasing curvature from the angle table and node curvature
// bounds.
Region narrowed_increasing(const DiscreteAnalysis& analysis, const AngleRanges& ranges,
                           const CurvatureRanges& curvature) {
  const int n = static_cast<int>(analysis.nodes.size());

  Region region;
  region.grade = Grade::narrowed;
  for (int j = 0; j < analysis.chords.size(); ++j) {
    const auto& ch = analysis.chords[j];
    const auto& r = ranges.chords[static_cast<std::size_t>(j)];
    try {
      const BiarcSpec lower = biarc_from_a(ch.half_length, r.alpha_lo, r.beta_hi,
                                           curvature.lower[static_cast<std::size_t>(j)]);
      const BiarcSpec upper = biarc_from_b(ch.half_length, r.alpha_hi, r.beta_lo,
                                           curvature.upper[static_cast<std::size_t>((j + 1) % n)]);
      region.chords.push_back(make_chord(ch.frame(), to_boundary(lower), to_boundary(upper),
                                         estimate_width(analysis, j)));
    } catch (const InfeasibleCurvature& e) {
      throw InfeasibleCurvature("chord " + std::to_string(j) + ": no spiral matches the data: " + e.what(), j);
    } catch (const DomainError& e) {
      throw InadmissibleData("chord " + std::to_string(j) + ": " + e.what(), j);
    }
  }
  region.curvature = curvature;
  finish(region);
  return region;
}

}  // namespace

std::string_view to_string(Grade grade) {
  switch (grade) {
    case Grade::simple: return "simple";
    case Grade::vertex: return "vertex";
    default: return "narrowed";
  }
}

Grade parse_grade(std::string_view name) {
  if (name == "simple") return Grade::simple;
  if (name == "vertex") return Grade::vertex;
  if (name == "narrowed") return Grade::narrowed;
  throw InputError("unknown grade '" + std::string(name) + "' (expected simple|vertex|narrowed)");
}

Region simple_region(const DiscreteAnalysis& analysis) {
  require_spiral(analysis, Grade::simple);
  Region region;
  region.grade = Grade::simple;
  for (int j = 0; j < analysis.chords.size(); ++j) {
    const auto& ch = analysis.chords[j];
    const auto& ang = analysis.angles[static_cast<std::size_t>(j)];
    region.chords.push_back(make_chord(ch.frame(), Arc(ch.half_length, -ang.eta),
                                       Arc(ch.half_length, ang.xi), estimate_width(analysis, j)));
  }
  finish(region);
  return region;
}

Region vertex_region(const DiscreteAnalysis& analysis) {
  require_admissible(analysis);
  const auto& cls = analysis.classification;
  const int n = static_cast<int>(analysis.nodes.size());
  std::vector<bool> is_vertex(static_cast<std::size_t>(n), false);
  for (const auto& v : cls.vertices) is_vertex[static_cast<std::size_t>(v.node)] = true;

  const auto& angles = analysis.angles;
  const int m = analysis.chords.size();
  auto angle_at = [&](int j) -> const ChordAngles& { return angles[static_cast<std::size_t>(((j % m) + m) % m)]; };
  auto rho_at = [&](int i) { return analysis.nodes[static_cast<std::size_t>(((i % n) + n) % n)].rho; };

  Region region;
  region.grade = Grade::vertex;
  for (int j = 0; j < m; ++j) {
    const auto& ch = analysis.chords[j];
    const double c = ch.half_length;
    const bool at_start = is_vertex[static_cast<std::size_t>(j)];
    const bool at_end = is_vertex[static_cast<std::size_t>((j + 1) % n)];
    BoundaryCurve first = Arc(c, -angle_at(j).eta);
    BoundaryCurve second = Arc(c, angle_at(j).xi);
    if (at_start && at_end) {
      throw InadmissibleData("chord " + std::to_string(j) + " joins two vertices", j);
    } else if (at_start) {
      second = checked_arc(c, -angle_at(j - 1).xi - rho_at(j), j);
    } else if (at_end) {
      first = checked_arc(c, angle_at(j + 1).eta - rho_at(j + 1), j);
    }
    region.chords.push_back(make_chord(ch.frame(), first, second, estimate_width(analysis, j)));
  }
  finish(region);
  return region;
}

AngleRanges narrowed_angle_ranges(const DiscreteAnalysis& analysis) {
  const int m = analysis.chords.size();
  const int n = static_cast<int>(analysis.nodes.size());
  const bool closed = analysis.chords.closed();
  auto angle_at = [&](int j) -> const ChordAngles& {
    return analysis.angles[static_cast<std::size_t>(((j % m) + m) % m)];
  };
  auto rho_at = [&](int i) { return analysis.nodes[static_cast<std::size_t>(((i % n) + n) % n)].rho; };

  AngleRanges out;
  out.chords.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const auto& a = angle_at(j);
    AngleRanges::Chord r;
    r.alpha_hi = a.xi;
    r.beta_hi = a.eta;
    r.alpha_lo = (!closed && j == 0) ? a.xi : std::max(-rho_at(j) - angle_at(j - 1).xi, -a.eta);
    r.beta_lo = (!closed && j == m - 1) ? a.eta : std::max(-a.xi, rho_at(j + 1) - angle_at(j + 1).eta);
    out.chords.push_back(r);
  }
  return out;
}

CurvatureRanges curvature_ranges(const DiscreteAnalysis& analysis, const AngleRanges& ranges,
                                 std::span<const CurvatureOverride> overrides) {
  const int n = static_cast<int>(analysis.nodes.size());
  const int m = analysis.chords.size();
  const bool closed = analysis.chords.closed();

  CurvatureRanges out;
  out.lower.resize(static_cast<std::size_t>(n));
  out.upper.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int before = ((i - 1) % m + m) % m;
    if (!closed && i == 0) {
      out.lower[0] = ExtendedReal::neg_inf();
    } else {
      out.lower[static_cast<std::size_t>(i)] =
          std::sin(ranges.chords[static_cast<std::size_t>(before)].beta_lo) / analysis.chords[before].half_length;
    }
    if (!closed && i == n - 1) {
      out.upper[static_cast<std::size_t>(i)] = ExtendedReal::pos_inf();
    } else {
      out.upper[static_cast<std::size_t>(i)] =
          -std::sin(ranges.chords[static_cast<std::size_t>(i)].alpha_lo) / analysis.chords[i].half_length;
    }
  }
  const double tol = curvature_tolerance(analysis);
  apply_overrides(out, overrides, tol);
  check_nonempty(out, tol);
  return out;
}

Region narrowed_region(const DiscreteAnalysis& analysis, std::span<const CurvatureOverride> overrides) {
  require_spiral(analysis, Grade::narrowed);
  if (analysis.classification.trend != Trend::decreasing) {
    const AngleRanges ranges = narrowed_angle_ranges(analysis);
    return narrowed_increasing(analysis, ranges, curvature_ranges(analysis, ranges, overrides));
  }

  // Decreasing data: build the region of the mirror image, whose curvature
  // increases, and reflect it back. Node and chord indices are unchanged;
  // overrides apply in the original orientation.
  const DiscreteAnalysis mirror = analyze(reflected(analysis.input));
  const AngleRanges ranges = narrowed_angle_ranges(mirror);
  CurvatureRanges curvature = reflected(curvature_ranges(mirror, ranges));
  const double tol = curvature_tolerance(analysis);
  apply_overrides(curvature, overrides, tol);
  check_nonempty(curvature, tol);
  const Region mr = narrowed_increasing(mirror, ranges, reflected(curvature));

  Region region;
  region.grade = Grade::narrowed;
  region.chords.reserve(mr.chords.size());
  for (int j = 0; j < analysis.chords.size(); ++j) {
    const RegionChord& src = mr.chords[static_cast<std::size_t>(j)];
    region.chords.push_back({analysis.chords[j].frame(), reflected(src.upper), reflected(src.lower), src.width,
                             src.width_estimate});
  }
  region.curvature = std::move(curvature);
  finish(region);
  return region;
}

Region build_region(const DiscreteAnalysis& analysis, Grade grade, std::span<const CurvatureOverride> overrides) {
  switch (grade) {
    case Grade::simple: return simple_region(analysis);
    case Grade::vertex: return vertex_region(analysis);
    default: return narrowed_region(analysis, overrides);
  }
}

Grade default_grade(const Classification& classification) {
  return classification.is_spiral() ? Grade::narrowed : Grade::vertex;
}

WidthReport region_width(const Region& region) {
  WidthReport out;
  for (const auto& ch : region.chords) {
    out.per_chord.push_back(chord_width(ch.lower, ch.upper));
    out.estimate.push_back(ch.width_estimate);
    out.width = std::max(out.width, out.per_chord.back());
  }
  return out;
}

}  // namespace spiralbound
