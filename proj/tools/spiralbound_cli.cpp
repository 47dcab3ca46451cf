// spiralbound: bounding regions for spiral interpolation of point data.
//
// Exit codes: 0 success / containment pass, 1 containment fail,
// 2 inadmissible data or infeasible curvature bounds, 3 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "spiralbound/bounding_regions.hpp"
#include "spiralbound/compliance.hpp"
#include "spiralbound/cubic_spline.hpp"
#include "spiralbound/errors.hpp"
#include "spiralbound/profile_io.hpp"
#include "spiralbound/rounding_experiment.hpp"
#include "spiralbound/svg.hpp"

namespace sb = spiralbound;

namespace {

enum ExitCode { kPass = 0, kContainmentFail = 1, kInadmissible = 2, kInputError = 3 };

struct RegionFlags {
  std::string profile;
  std::string grade;
  std::string svg;
  std::string output;
  bool degrees = false;
  int samples_per_chord = sb::kDefaultSamplesPerChord;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sb::InputError("cannot write " + path);
  out << text;
}

void print_summary(const sb::DiscreteAnalysis& analysis, const sb::Region* region) {
  const auto& cls = analysis.classification;
  std::cerr << "nodes " << analysis.nodes.size() << ", chords " << analysis.chords.size() << ", ";
  switch (cls.kind) {
    case sb::Classification::Kind::spiral: std::cerr << "spiral"; break;
    case sb::Classification::Kind::piecewise_spiral:
      std::cerr << "piecewise spiral with " << cls.vertices.size() << " vertices";
      break;
    default: std::cerr << "inadmissible"; break;
  }
  if (region) std::cerr << ", " << sb::to_string(region->grade) << " width " << region->width;
  std::cerr << '\n';
}

// Runs the analysis and builds the requested region. Lim180 violations are
// reported (and the report still written) before failing with exit 2.
struct Built {
  sb::DiscreteAnalysis analysis;
  sb::Region region;
};

Built build(const RegionFlags& flags, bool write_report) {
  const sb::Profile profile = sb::read_profile(flags.profile, flags.degrees);
  sb::DiscreteAnalysis analysis = sb::analyze(profile.input);
  const auto& cls = analysis.classification;
  if (cls.kind == sb::Classification::Kind::inadmissible) {
    if (write_report && !flags.output.empty()) write_text(flags.output, sb::serialize(sb::make_report(analysis, nullptr)));
    const auto& v = cls.violations.front();
    throw sb::InadmissibleData(v.describe(), v.node);
  }
  const sb::Grade grade = flags.grade.empty() ? sb::default_grade(cls) : sb::parse_grade(flags.grade);
  sb::Region region = sb::build_region(analysis, grade, profile.overrides);
  return {std::move(analysis), std::move(region)};
}

void maybe_svg(const RegionFlags& flags, const Built& built) {
  if (flags.svg.empty()) return;
  sb::SvgOptions options;
  options.samples_per_chord = flags.samples_per_chord;
  write_text(flags.svg, sb::render_svg(built.analysis, &built.region, options));
}

int cmd_analyze(const RegionFlags& flags) {
  const Built built = build(flags, true);
  write_text(flags.output, sb::serialize(sb::make_report(built.analysis, &built.region)));
  maybe_svg(flags, built);
  print_summary(built.analysis, &built.region);
  return kPass;
}

int cmd_check(const RegionFlags& flags, const std::string& samples_path, std::optional<double> tol,
              const std::string& plot_path) {
  const auto samples = sb::read_samples(samples_path);
  if (samples.empty()) throw sb::InputError("samples file " + samples_path + " contains no samples");
  const Built built = build(flags, false);
  if (!plot_path.empty()) {
    std::ofstream plot(plot_path);
    if (!plot) throw sb::InputError("cannot write " + plot_path);
    sb::write_plot(plot, sb::discrete_curvature_plot(samples));
  }
  const sb::ComplianceReport report = sb::check_containment(built.region, samples, tol);
  if (!flags.output.empty()) write_text(flags.output, sb::serialize(report));
  maybe_svg(flags, built);

  std::cout << (report.pass ? "PASS" : "FAIL") << " worst_margin " << report.worst_margin << " tolerance "
            << report.tolerance << " samples " << samples.size() << " unassigned " << report.unassigned << '\n';
  if (!report.pass) {
    constexpr std::size_t kShown = 10;
    for (std::size_t k = 0; k < report.violations.size() && k < kShown; ++k) {
      const int s = report.violations[k];
      for (const auto& m : report.samples) {
        if (m.sample != s) continue;
        std::cout << "  sample " << s << " chord " << m.chord << " x " << m.x << " margin " << m.margin() << '\n';
      }
    }
    if (report.violations.size() > kShown) {
      std::cout << "  ... " << report.violations.size() - kShown << " more\n";
    }
    return kContainmentFail;
  }
  return kPass;
}

int cmd_spline_fixture(const RegionFlags& flags) {
  const sb::Profile profile = sb::read_profile(flags.profile, flags.degrees);
  const auto samples = sb::cubic_spline_fixture(profile.input, flags.samples_per_chord);
  if (flags.output.empty() || flags.output == "-") {
    sb::write_samples(std::cout, samples);
  } else {
    std::ofstream out(flags.output);
    if (!out) throw sb::InputError("cannot write " + flags.output);
    sb::write_samples(out, samples);
  }
  return kPass;
}

int cmd_rounding_experiment(const std::string& rounded_plot, const std::string& exact_plot) {
  const sb::RoundingExperiment ex = sb::run_rounding_experiment();
  std::cout << "points " << ex.exact.points.size() << ", reference curvature " << ex.reference_curvature << '\n'
            << "exact:   max |q - 0.1| = " << ex.exact_max_deviation << '\n'
            << "rounded: max |q - 0.1| = " << ex.rounded_max_deviation << ", sign changes of dq = "
            << ex.rounded_sign_changes << '\n'
            << "node  x  y  q_exact  q_rounded\n";
  for (std::size_t i = 0; i < ex.rounded_plot.size(); ++i) {
    const auto& p = ex.rounded.points[i + 1];
    std::printf("%2zu  %.2f  %.2f  %.6f  %.4f\n", i + 1, p.x(), p.y(), ex.exact_plot[i].q, ex.rounded_plot[i].q);
  }
  auto dump = [](const std::string& path, const auto& plot) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw sb::InputError("cannot write " + path);
    sb::write_plot(out, plot);
  };
  dump(rounded_plot, ex.rounded_plot);
  dump(exact_plot, ex.exact_plot);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounding regions for spiral interpolation of planar point data"};
  app.require_subcommand(1);

  RegionFlags flags;
  std::string samples_path, plot_path, exact_plot_path;
  std::optional<double> tol;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("profile", flags.profile, "Profile file")->required();
    cmd->add_flag("--degrees", flags.degrees, "Read numeric tangent angles in degrees");
  };
  auto add_region = [&](CLI::App* cmd) {
    cmd->add_option("--grade", flags.grade, "simple, vertex or narrowed (default: narrowed for spirals, vertex otherwise)")
        ->check(CLI::IsMember({"simple", "vertex", "narrowed"}));
    cmd->add_option("--svg", flags.svg, "Write an SVG drawing of the region");
    cmd->add_option("--samples-per-chord", flags.samples_per_chord, "Points per chord in drawings")
        ->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Classify the data and build its bounding region");
  add_common(analyze);
  add_region(analyze);
  analyze->add_option("-o,--output", flags.output, "Region report (default: stdout)");

  auto* check = app.add_subcommand("check", "Test whether curve samples stay inside the region");
  add_common(check);
  check->add_option("samples", samples_path, "Curve samples, one 'x y' pair per line")->required();
  add_region(check);
  check->add_option("--tol", tol, "Containment tolerance (default 1e-9 * largest half-chord)")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--curvature-plot", plot_path, "Write the discrete curvature plot of the samples");
  check->add_option("-o,--output", flags.output, "Compliance report");

  auto* fixture = app.add_subcommand("spline-fixture", "Sample the chord-length cubic spline through the data");
  add_common(fixture);
  fixture->add_option("--samples-per-chord", flags.samples_per_chord, "Samples per chord")
      ->check(CLI::PositiveNumber);
  fixture->add_option("-o,--output", flags.output, "Samples file (default: stdout)");

  auto* rounding = app.add_subcommand("rounding-experiment", "Curvature of circle data before and after rounding");
  rounding->add_option("--curvature-plot", plot_path, "Write the rounded-data curvature plot");
  rounding->add_option("--exact-plot", exact_plot_path, "Write the exact-data curvature plot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(flags);
    if (*check) return cmd_check(flags, samples_path, tol, plot_path);
    if (*fixture) return cmd_spline_fixture(flags);
    return cmd_rounding_experiment(plot_path, exact_plot_path);
  } catch (const sb::InadmissibleData& e) {
    std::cerr << "inadmissible: " << e.what() << '\n';
    return kInadmissible;
  } catch (const sb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
