// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spiralbound/bounding_regions.hpp"
#include "spiralbound/compliance.hpp"
#include "spiralbound/core_geometry.hpp"
#include "spiralbound/discrete_analysis.hpp"
#include "spiralbound/rounding_experiment.hpp"
#include "support/log_spiral.hpp"

namespace sb = spiralbound;
namespace st = spiralbound::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<st::SpiralCase> monotone_datasets() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> nodes(5, 16);
  std::vector<st::SpiralCase> out;
  for (int i = 0; i < 100; ++i) out.push_back(st::random_spiral_case(rng, nodes(rng)));
  return out;
}

double max_half_chord(const sb::DiscreteAnalysis& a) {
  double c = 0.0;
  for (const auto& ch : a.chords.real()) c = std::max(c, ch.half_length);
  return c;
}

Outcome circle_reproduction() {
  const auto t0 = Clock::now();
  const auto analysis = sb::analyze(sb::circle_dataset());
  double dq = 0.0;
  for (std::size_t i = 1; i + 1 < analysis.nodes.size(); ++i) dq = std::max(dq, std::abs(analysis.nodes[i].q - 0.1));
  const auto region = sb::simple_region(analysis);
  const double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << "max|q-0.1| = " << dq << ", width = " << region.width << ", " << elapsed << " s";
  return {dq <= 1e-9 && std::abs(region.width) <= 1e-10 && elapsed < 0.1, os.str()};
}

Outcome rounding_experiment() {
  const auto t0 = Clock::now();
  const auto ex = sb::run_rounding_experiment();
  const double elapsed = seconds_since(t0);
  double lo = ex.rounded_plot.front().q, hi = lo;
  for (const auto& p : ex.rounded_plot) {
    lo = std::min(lo, p.q);
    hi = std::max(hi, p.q);
  }
  std::ostringstream os;
  os << "max|q-0.1| = " << ex.rounded_max_deviation << " (needs > 0.05), sign changes = "
     << ex.rounded_sign_changes << " (needs >= 5), " << elapsed << " s";
  const bool pass = hi > lo && ex.rounded_max_deviation > 0.05 && ex.rounded_sign_changes >= 5 && elapsed < 0.1;
  return {pass, os.str()};
}

Outcome lens_suite() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int failures = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    st::LogSpiral s;
    s.k = 0.05 + 0.6 * u(rng);
    s.backwards = u(rng) < 0.5;
    s.mirror = true;  // clockwise: signed curvature increases in either direction
    s.rotation = 2.0 * sb::kPi * u(rng);
    s.scale = 0.2 + 3.0 * u(rng);
    const double ta = -3.0 + 6.0 * u(rng);
    const double tb = ta + 0.05 + 2.5 * u(rng);
    const double t_start = s.backwards ? tb : ta;
    const double t_end = s.backwards ? ta : tb;

    const sb::ChordFrame frame(s.point(t_start), s.point(t_end));
    const double c = frame.half_length();
    const double alpha = sb::wrap_angle(s.tangent(t_start) - frame.direction());
    const double beta = sb::wrap_angle(s.tangent(t_end) - frame.direction());
    // Lens bounds need end tangents within a quarter-turn of the chord.
    if (std::abs(alpha) >= sb::kHalfPi || std::abs(beta) >= sb::kHalfPi) {
      --trial;
      continue;
    }
    const double a = s.curvature(t_start);
    const double b = s.curvature(t_end);
    bool ok = (b > a) == (alpha + beta > 0) && a * c < -std::sin(alpha) && std::sin(beta) < b * c;
    const sb::Arc lower(c, -beta), upper(c, alpha);
    for (int k = 0; k < 1000 && ok; ++k) {
      const sb::Point p = frame.to_local(s.point(t_start + (t_end - t_start) * k / 999.0));
      const double x = std::clamp(p.x(), -c, c);
      const double m = std::min(p.y() - sb::arc_eval(lower, x), sb::arc_eval(upper, x) - p.y());
      worst = std::min(worst, m / c);
      ok = std::abs(p.x()) <= c * (1.0 + 1e-9) && m >= -1e-9 * c;
    }
    failures += ok ? 0 : 1;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << failures << " of 1000 arcs fail, worst relative margin " << worst << ", " << elapsed << " s";
  return {failures == 0 && elapsed < 5.0, os.str()};
}

Outcome spiral_classification(const std::vector<st::SpiralCase>& cases) {
  int lim180 = 0, wrong = 0;
  for (const auto& sc : cases) {
    const auto a = sb::analyze(sc.input);
    if (!a.violations.empty()) ++lim180;
    if (!a.classification.is_spiral()) ++wrong;
  }
  std::ostringstream os;
  os << cases.size() << " datasets, " << lim180 << " with violations, " << wrong << " not classified as spiral";
  return {lim180 == 0 && wrong == 0, os.str()};
}

Outcome simple_soundness(const std::vector<st::SpiralCase>& cases) {
  int failures = 0;
  double worst = 0.0;
  for (const auto& sc : cases) {
    const auto a = sb::analyze(sc.input);
    const auto region = sb::simple_region(a);
    const auto samples = sc.spiral.dense(sc.ts.front(), sc.ts.back(), 10000);
    const auto report = sb::check_containment(region, samples, 1e-9 * max_half_chord(a));
    worst = std::min(worst, report.worst_margin);
    if (!report.pass || report.unassigned > 0) ++failures;
  }
  std::ostringstream os;
  os << failures << " of " << cases.size() << " datasets fail, worst margin " << worst;
  return {failures == 0, os.str()};
}

Outcome narrowed_soundness(const std::vector<st::SpiralCase>& cases) {
  int unsound = 0, not_nested = 0;
  double worst_nesting = 0.0;
  for (const auto& sc : cases) {
    const auto a = sb::analyze(sc.input);
    const auto simple = sb::simple_region(a);
    const auto narrowed = sb::narrowed_region(a);
    const auto samples = sc.spiral.dense(sc.ts.front(), sc.ts.back(), 10000);
    const auto report = sb::check_containment(narrowed, samples, 1e-9 * max_half_chord(a));
    if (!report.pass || report.unassigned > 0) ++unsound;
    bool nested = true;
    for (std::size_t j = 0; j < simple.chords.size(); ++j) {
      const auto& s = simple.chords[j];
      const auto& n = narrowed.chords[j];
      const double c = s.frame.half_length();
      for (int k = 0; k < 1000; ++k) {
        const double x = -c + 2.0 * c * k / 999.0;
        const double slack = std::min(sb::eval(n.lower, x) - sb::eval(s.lower, x),
                                      sb::eval(s.upper, x) - sb::eval(n.upper, x));
        worst_nesting = std::min(worst_nesting, slack / c);
        if (slack < -1e-10 * c) nested = false;
      }
    }
    if (!nested) ++not_nested;
  }
  std::ostringstream os;
  os << unsound << " unsound, " << not_nested << " not nested, worst relative nesting slack " << worst_nesting;
  return {unsound == 0 && not_nested == 0, os.str()};
}

double spiral_width(int n) {
  st::LogSpiral s;
  s.k = 0.3;
  std::vector<double> ts;
  for (int i = 0; i < n; ++i) ts.push_back(sb::kPi * i / (n - 1));
  const auto a = sb::analyze(s.dataset(ts));
  return sb::build_region(a, sb::default_grade(a.classification)).width;
}

Outcome cubic_convergence() {
  std::ostringstream os;
  bool pass = true;
  for (int n : {8, 16, 32}) {
    const double ratio = spiral_width(n) / spiral_width(2 * n);
    os << "N=" << n << ": " << ratio << "  ";
    pass = pass && ratio >= 6.0 && ratio <= 10.0;
  }
  return {pass, os.str()};
}

// Four points on the unit circle, preceded by a flatter and followed by a
// sharper circular piece, so q increases and stays constant across them.
sb::SplineInput cocircular_dataset() {
  sb::SplineInput in;
  const auto on = [](const sb::Point& centre, double r, double t) {
    return sb::Point(centre + r * sb::Point(std::cos(t), std::sin(t)));
  };
  const double t0 = -0.5 * sb::kPi;
  const sb::Point flat_centre(0.0, 1.0);  // radius 2, tangent to the unit circle at (0, -1)
  in.points.push_back(on(flat_centre, 2.0, t0 - 0.3));
  in.points.push_back(on(flat_centre, 2.0, t0 - 0.15));
  for (int i = 0; i < 4; ++i) in.points.push_back(on(sb::Point::Zero(), 1.0, t0 + 0.3 * i));
  const double t3 = t0 + 0.9;
  const sb::Point sharp_centre = 0.5 * sb::Point(std::cos(t3), std::sin(t3));  // radius 0.5
  in.points.push_back(on(sharp_centre, 0.5, t3 + 0.3));
  in.points.push_back(on(sharp_centre, 0.5, t3 + 0.6));
  in.tau_start = t0 - 0.3 + sb::kHalfPi;
  in.tau_end = t3 + 0.6 + sb::kHalfPi;
  return in;
}

Outcome cocircular() {
  const auto a = sb::analyze(cocircular_dataset());
  if (!a.classification.is_spiral()) return {false, "dataset does not classify as spiral"};
  const auto simple = sb::simple_region(a);
  const auto narrowed = sb::narrowed_region(a);
  // Cocircular nodes 2..5: inner chord 3, spanned chords 2, 3, 4.
  const double inner = simple.chords[3].width;
  double spanned = 0.0;
  for (int j : {2, 3, 4}) spanned = std::max(spanned, narrowed.chords[static_cast<std::size_t>(j)].width);
  std::ostringstream os;
  os << "simple inner width " << inner << ", narrowed max over spanned chords " << spanned;
  return {inner <= 1e-10 && spanned <= 1e-10, os.str()};
}

Outcome oval_vertex_region() {
  const double ea = 2.0, eb = 1.0;
  const auto a = sb::analyze(st::ellipse(ea, eb, 16));
  const auto& cls = a.classification;
  std::ostringstream os;
  os << cls.vertices.size() << " vertices";
  if (!a.violations.empty() || cls.vertices.size() != 4) return {false, os.str()};
  const auto region = sb::vertex_region(a);
  const auto report = sb::check_containment(region, st::dense_ellipse(ea, eb, 20000));
  os << ", worst margin " << report.worst_margin << ", violations " << report.violations.size() << ", unassigned "
     << report.unassigned << ", width " << region.width;
  return {report.pass && report.unassigned == 0, os.str()};
}

Outcome biarc_algebra() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_residual = 0.0, worst_trip = 0.0, worst_degenerate = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double c = 0.1 + 5.0 * u(rng);
    double alpha = 0.0, beta = 0.0;
    do {
      alpha = (u(rng) - 0.5) * 0.98 * sb::kPi;
      beta = (u(rng) - 0.5) * 0.98 * sb::kPi;
    } while (alpha + beta <= 1e-3);
    for (double p : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
      const auto spec = sb::biarc_from_p(c, alpha, beta, p);
      worst_residual = std::max(worst_residual, std::abs(sb::biarc_residual(spec)));
      const auto from_a = sb::biarc_from_a(c, alpha, beta, spec.a);
      const auto from_b = sb::biarc_from_b(c, alpha, beta, spec.b);
      worst_trip = std::max({worst_trip, std::abs(from_a.p.value() - p) / p, std::abs(from_b.p.value() - p) / p,
                             std::abs(from_a.b.value() - spec.b.value()) / (1.0 + std::abs(spec.b.value())),
                             std::abs(from_b.a.value() - spec.a.value()) / (1.0 + std::abs(spec.a.value()))});
    }
    const auto zero = sb::biarc_from_p(c, alpha, beta, 0.0);
    const auto inf = sb::biarc_from_p(c, alpha, beta, sb::ExtendedReal::pos_inf());
    const sb::Arc start_arc(c, -beta), end_arc(c, alpha);
    for (int k = 0; k < 1000; ++k) {
      const double x = -c + 2.0 * c * k / 999.0;
      worst_degenerate = std::max({worst_degenerate, std::abs(sb::biarc_eval(zero, x) - sb::arc_eval(start_arc, x)),
                                   std::abs(sb::biarc_eval(inf, x) - sb::arc_eval(end_arc, x))});
    }
  }
  std::ostringstream os;
  os << "residual " << worst_residual << ", round trip " << worst_trip << ", degenerate " << worst_degenerate;
  return {worst_residual < 1e-10 && worst_trip < 1e-10 && worst_degenerate <= 1e-12, os.str()};
}

}  // namespace

int main() {
  const auto cases = monotone_datasets();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"circle reproduction", circle_reproduction},
      {"rounding experiment", rounding_experiment},
      {"lens and curvature bounds on log-spiral arcs", lens_suite},
      {"monotone spiral data classifies as spiral", [&] { return spiral_classification(cases); }},
      {"simple region soundness", [&] { return simple_soundness(cases); }},
      {"narrowed region soundness and nesting", [&] { return narrowed_soundness(cases); }},
      {"cubic convergence of the width", cubic_convergence},
      {"cocircular degeneracy", cocircular},
      {"vertex region soundness on an oval", oval_vertex_region},
      {"biarc algebra", biarc_algebra},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %2zu: %s  %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed;
}
