#include "spiralbound/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "spiralbound/errors.hpp"

namespace spiralbound {

namespace {

void path_for(std::ostream& os, const RegionChord& chord, const BoundaryCurve& curve, const char* cls, int index,
              int samples) {
  const double c = chord.frame.half_length();
  os << "    <path class=\"" << cls << "\" data-chord=\"" << index << "\" d=\"";
  for (int k = 0; k < samples; ++k) {
    const double x = -c + 2.0 * c * k / (samples - 1);
    const Point g = chord.frame.to_global(Point(x, eval(curve, x)));
    os << (k == 0 ? "M" : " L") << g.x() << ' ' << g.y();
  }
  os << "\"/>\n";
}

}  // namespace

std::string render_svg(const DiscreteAnalysis& analysis, const Region* region, const SvgOptions& options) {
  if (options.samples_per_chord < 2) throw InputError("SVG needs at least 2 samples per chord");
  const auto& pts = analysis.input.points;
  Eigen::AlignedBox2d box;
  for (const auto& p : pts) box.extend(p);
  if (region) {
    for (const auto& ch : region->chords) {
      for (double x : {-0.5, 0.0, 0.5}) {
        const double xc = x * ch.frame.half_length();
        box.extend(ch.frame.to_global(Point(xc, eval(ch.lower, xc))));
        box.extend(ch.frame.to_global(Point(xc, eval(ch.upper, xc))));
      }
    }
  }
  const double extent = std::max({box.sizes().x(), box.sizes().y(), std::numeric_limits<double>::min()});
  const double inner = options.canvas_width - 2.0 * options.margin;
  const double s = inner / extent;
  const double height = box.sizes().y() * s + 2.0 * options.margin;
  const double tx = options.margin - s * box.min().x();
  const double ty = options.margin + s * box.max().y();
  const double stroke = 1.0 / s;
  const double dot = 3.0 / s;
  const double tangent_length = 0.08 * extent;

  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.canvas_width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << options.canvas_width << ' ' << height << "\">\n"
     << "  <style>.lower{stroke:#1f77b4}.upper{stroke:#d62728}.lower,.upper,.tangent{fill:none;stroke-width:"
     << stroke << "}.tangent{stroke:#2ca02c}.node{fill:#000}.width{font:11px sans-serif}</style>\n"
     << "  <g id=\"model\" transform=\"matrix(" << s << " 0 0 " << -s << ' ' << tx << ' ' << ty << ")\">\n";

  if (region) {
    for (std::size_t j = 0; j < region->chords.size(); ++j) {
      const auto& ch = region->chords[j];
      path_for(os, ch, ch.lower, "lower", static_cast<int>(j), options.samples_per_chord);
      path_for(os, ch, ch.upper, "upper", static_cast<int>(j), options.samples_per_chord);
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << "    <circle class=\"node\" data-node=\"" << i << "\" cx=\"" << pts[i].x() << "\" cy=\"" << pts[i].y()
       << "\" r=\"" << dot << "\"/>\n";
  }
  const auto tangent = [&](const Point& p, double angle, const char* which) {
    const Point e = p + tangent_length * unit(angle);
    os << "    <line class=\"tangent\" data-end=\"" << which << "\" x1=\"" << p.x() << "\" y1=\"" << p.y()
       << "\" x2=\"" << e.x() << "\" y2=\"" << e.y() << "\"/>\n";
  };
  if (analysis.input.tau_start) tangent(pts.front(), *analysis.input.tau_start, "start");
  if (analysis.input.tau_end) tangent(pts.back(), *analysis.input.tau_end, "end");

  if (region && options.width_labels) {
    // Text is flipped back upright and kept at a fixed pixel size.
    for (std::size_t j = 0; j < region->chords.size(); ++j) {
      const auto& ch = region->chords[j];
      const Point at = ch.frame.to_global(Point(0.0, eval(ch.upper, 0.0)));
      std::ostringstream label;
      label.precision(4);
      label << ch.width;
      os << "    <text class=\"width\" data-chord=\"" << j << "\" transform=\"matrix(" << 1.0 / s << " 0 0 "
         << -1.0 / s << ' ' << at.x() << ' ' << at.y() << ")\" x=\"4\" y=\"-4\">" << label.str() << "</text>\n";
    }
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace spiralbound
