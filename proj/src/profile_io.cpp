#include "spiralbound/profile_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "spiralbound/errors.hpp"

namespace spiralbound {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(where + ": non-finite number");
  return v;
}

Point point_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected [x, y]");
  return {finite_number(j[0], where), finite_number(j[1], where)};
}

double tangent_from(const json& j, bool degrees, const std::string& where) {
  if (j.is_number()) {
    const double v = finite_number(j, where);
    return degrees ? v * kPi / 180.0 : v;
  }
  const Point u = point_from(j, where);
  if (u.norm() == 0.0) throw InputError(where + ": zero tangent vector");
  return std::atan2(u.y(), u.x());
}

json extended_to_json(const ExtendedReal& v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

ExtendedReal extended_from_json(const json& j) {
  if (j.is_number()) return ExtendedReal(j.get<double>());
  if (j.is_string()) return ExtendedReal::parse(j.get<std::string>());
  throw InputError("expected a number or \"+inf\"/\"-inf\"");
}

json point_to_json(const Point& p) { return json::array({p.x(), p.y()}); }

std::string_view to_string(BiarcSpec::Degeneracy d) {
  switch (d) {
    case BiarcSpec::Degeneracy::start_impulse: return "start-impulse";
    case BiarcSpec::Degeneracy::end_impulse: return "end-impulse";
    case BiarcSpec::Degeneracy::merged: return "merged";
    default: return "none";
  }
}

BiarcSpec::Degeneracy parse_degeneracy(const std::string& s) {
  if (s == "start-impulse") return BiarcSpec::Degeneracy::start_impulse;
  if (s == "end-impulse") return BiarcSpec::Degeneracy::end_impulse;
  if (s == "merged") return BiarcSpec::Degeneracy::merged;
  if (s == "none") return BiarcSpec::Degeneracy::none;
  throw InputError("unknown biarc degeneracy '" + s + "'");
}

json curve_to_json(const BoundaryCurve& curve) {
  if (const auto* arc = std::get_if<Arc>(&curve)) {
    return {{"type", "arc"}, {"c", arc->c()}, {"phi", arc->phi()}};
  }
  const auto& b = std::get<BiarcSpec>(curve);
  json j = {{"type", "biarc"},
            {"c", b.c},
            {"alpha", b.alpha},
            {"beta", b.beta},
            {"a", extended_to_json(b.a)},
            {"b", extended_to_json(b.b)},
            {"p", extended_to_json(b.p)},
            {"degeneracy", to_string(b.degeneracy)}};
  j["join"] = b.join ? point_to_json(*b.join) : json(nullptr);
  return j;
}

BoundaryCurve curve_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "arc") return Arc(j.at("c").get<double>(), j.at("phi").get<double>());
  if (type != "biarc") throw InputError("unknown curve type '" + type + "'");
  BiarcSpec b;
  b.c = j.at("c").get<double>();
  b.alpha = j.at("alpha").get<double>();
  b.beta = j.at("beta").get<double>();
  b.a = extended_from_json(j.at("a"));
  b.b = extended_from_json(j.at("b"));
  b.p = extended_from_json(j.at("p"));
  b.degeneracy = parse_degeneracy(j.at("degeneracy").get<std::string>());
  if (!j.at("join").is_null()) b.join = point_from(j.at("join"), "join");
  return b;
}

std::string_view to_string(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::spiral: return "spiral";
    case Classification::Kind::piecewise_spiral: return "piecewise-spiral";
    default: return "inadmissible";
  }
}

std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::increasing: return "increasing";
    case Trend::decreasing: return "decreasing";
    default: return "constant";
  }
}

std::string dump(const json& j) {
  // nlohmann writes doubles with max_digits10, so values survive a round trip.
  return j.dump(2) + "\n";
}

}  // namespace

Profile parse_profile(std::string_view text, bool degrees) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("profile is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("profile must be a JSON object");
  if (!doc.contains("version") || doc["version"] != kProfileVersion) {
    throw InputError("profile version must be \"" + std::string(kProfileVersion) + "\"");
  }

  Profile prof;
  try {
    if (doc.contains("angle_unit")) {
      const auto unit_name = doc["angle_unit"].get<std::string>();
      if (unit_name == "degrees") {
        degrees = true;
      } else if (unit_name != "radians") {
        throw InputError("angle_unit must be \"radians\" or \"degrees\"");
      }
    }
    const json& pts = doc.at("points");
    if (!pts.is_array()) throw InputError("points must be an array");
    for (std::size_t i = 0; i < pts.size(); ++i) prof.input.points.push_back(point_from(pts[i], "point " + std::to_string(i)));
    prof.input.closed = doc.value("closed", false);
    if (doc.contains("tangents") && !doc["tangents"].is_null()) {
      const json& t = doc["tangents"];
      if (t.contains("start")) prof.input.tau_start = tangent_from(t["start"], degrees, "start tangent");
      if (t.contains("end")) prof.input.tau_end = tangent_from(t["end"], degrees, "end tangent");
    }
    if (doc.contains("curvature_overrides")) {
      for (const auto& [key, bounds] : doc["curvature_overrides"].items()) {
        CurvatureOverride o;
        std::size_t used = 0;
        try {
          o.node = std::stoi(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size()) throw InputError("curvature override key '" + key + "' is not a node index");
        if (o.node < 0 || o.node >= static_cast<int>(prof.input.points.size())) {
          throw InputError("curvature override references node " + key + ", which does not exist");
        }
        if (bounds.contains("a")) o.lower = finite_number(bounds["a"], "override a at node " + key);
        if (bounds.contains("b")) o.upper = finite_number(bounds["b"], "override b at node " + key);
        prof.overrides.push_back(o);
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed profile: ") + e.what());
  }
  validate(prof.input);
  return prof;
}

Profile read_profile(const std::filesystem::path& path, bool degrees) { return parse_profile(read_file(path), degrees); }

std::string format_profile(const Profile& profile) {
  json doc;
  doc["version"] = kProfileVersion;
  doc["points"] = json::array();
  for (const auto& p : profile.input.points) doc["points"].push_back(point_to_json(p));
  doc["closed"] = profile.input.closed;
  if (profile.input.tau_start || profile.input.tau_end) {
    json t = json::object();
    if (profile.input.tau_start) t["start"] = *profile.input.tau_start;
    if (profile.input.tau_end) t["end"] = *profile.input.tau_end;
    doc["tangents"] = t;
  }
  if (!profile.overrides.empty()) {
    json o = json::object();
    for (const auto& ov : profile.overrides) {
      json b = json::object();
      if (ov.lower) b["a"] = *ov.lower;
      if (ov.upper) b["b"] = *ov.upper;
      o[std::to_string(ov.node)] = b;
    }
    doc["curvature_overrides"] = o;
  }
  return dump(doc);
}

std::vector<Point> parse_samples(std::string_view text) {
  std::vector<Point> out;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line) {
      if (ch == ',' || ch == ';') ch = ' ';
    }
    std::istringstream fields(line);
    double x = 0.0, y = 0.0;
    std::string extra;
    if (!(fields >> std::ws) || fields.eof()) continue;
    if (!(fields >> x >> y) || (fields >> extra) || !std::isfinite(x) || !std::isfinite(y)) {
      throw InputError("samples line " + std::to_string(lineno) + ": expected two numbers");
    }
    out.emplace_back(x, y);
  }
  return out;
}

std::vector<Point> read_samples(const std::filesystem::path& path) { return parse_samples(read_file(path)); }

void write_samples(std::ostream& out, std::span<const Point> samples) {
  const auto flags = out.flags();
  const auto prec = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& p : samples) out << p.x() << ' ' << p.y() << '\n';
  out.precision(prec);
  out.flags(flags);
}

void write_plot(std::ostream& out, std::span<const CurvaturePlotPoint> plot) {
  const auto prec = out.precision(std::numeric_limits<double>::max_digits10);
  out << "# arc_length q\n";
  for (const auto& p : plot) out << p.arc_length << ' ' << p.q << '\n';
  out.precision(prec);
}

RegionReport make_report(const DiscreteAnalysis& analysis, const Region* region) {
  RegionReport r;
  const auto& cls = analysis.classification;
  r.classification = to_string(cls.kind);
  r.trend = to_string(cls.trend);
  r.closed = analysis.input.closed;
  r.vertices = cls.vertices;
  r.violations = analysis.violations;
  if (region) {
    r.grade = to_string(region->grade);
    r.width = region->width;
  }
  const auto n = analysis.nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& nd = analysis.nodes[i];
    NodeReport nr{nd.index, nd.rho, nd.d, nd.q};
    if (region && region->curvature) {
      nr.curvature_lower = region->curvature->lower[i];
      nr.curvature_upper = region->curvature->upper[i];
    }
    r.nodes.push_back(nr);
  }
  for (int j = 0; j < analysis.chords.size(); ++j) {
    const auto& ch = analysis.chords[j];
    const auto& ang = analysis.angles[static_cast<std::size_t>(j)];
    ChordReport cr;
    cr.index = j;
    cr.c = ch.half_length;
    cr.mu = ch.direction;
    cr.xi = ang.xi;
    cr.eta = ang.eta;
    cr.origin = 0.5 * (ch.start + ch.end);
    const double q0 = analysis.nodes[static_cast<std::size_t>(j)].q;
    const double q1 = analysis.nodes[static_cast<std::size_t>(j + 1) % n].q;
    cr.width_estimate = 0.5 * cr.c * cr.c * std::abs(q0 - q1);
    if (region) {
      const auto& rc = region->chords[static_cast<std::size_t>(j)];
      cr.width = rc.width;
      cr.width_estimate = rc.width_estimate;
      cr.lower = rc.lower;
      cr.upper = rc.upper;
    }
    r.chords.push_back(cr);
  }
  return r;
}

std::string serialize(const RegionReport& report) {
  json doc;
  doc["version"] = kReportVersion;
  doc["grade"] = report.grade.empty() ? json(nullptr) : json(report.grade);
  doc["classification"] = report.classification;
  doc["trend"] = report.trend;
  doc["closed"] = report.closed;
  doc["width"] = report.width ? json(*report.width) : json(nullptr);
  doc["vertices"] = json::array();
  for (const auto& v : report.vertices) {
    doc["vertices"].push_back({{"node", v.node},
                               {"kind", v.kind == VertexKind::maximum ? "maximum" : "minimum"},
                               {"plateau_length", v.plateau_length}});
  }
  doc["violations"] = json::array();
  for (const auto& v : report.violations) {
    doc["violations"].push_back(
        {{"node", v.node}, {"inequality", v.inequality}, {"value", v.value}, {"message", v.describe()}});
  }
  doc["nodes"] = json::array();
  for (const auto& n : report.nodes) {
    doc["nodes"].push_back({{"index", n.index},
                            {"rho", n.rho},
                            {"d", n.d},
                            {"q", n.q},
                            {"curvature_lower", extended_to_json(n.curvature_lower)},
                            {"curvature_upper", extended_to_json(n.curvature_upper)}});
  }
  doc["chords"] = json::array();
  for (const auto& c : report.chords) {
    json jc = {{"index", c.index},
               {"c", c.c},
               {"mu", c.mu},
               {"xi", c.xi},
               {"eta", c.eta},
               {"origin", point_to_json(c.origin)},
               {"width_estimate", c.width_estimate}};
    jc["width"] = c.width ? json(*c.width) : json(nullptr);
    jc["lower"] = c.lower ? curve_to_json(*c.lower) : json(nullptr);
    jc["upper"] = c.upper ? curve_to_json(*c.upper) : json(nullptr);
    doc["chords"].push_back(jc);
  }
  return dump(doc);
}

RegionReport parse_report(std::string_view text) {
  RegionReport r;
  try {
    const json doc = json::parse(text.begin(), text.end());
    if (doc.at("version") != kReportVersion) throw InputError("unsupported report version");
    if (!doc.at("grade").is_null()) r.grade = doc["grade"].get<std::string>();
    r.classification = doc.at("classification").get<std::string>();
    r.trend = doc.at("trend").get<std::string>();
    r.closed = doc.at("closed").get<bool>();
    if (!doc.at("width").is_null()) r.width = doc["width"].get<double>();
    for (const auto& v : doc.at("vertices")) {
      r.vertices.push_back({v.at("node").get<int>(),
                            v.at("kind") == "maximum" ? VertexKind::maximum : VertexKind::minimum,
                            v.at("plateau_length").get<int>()});
    }
    for (const auto& v : doc.at("violations")) {
      r.violations.push_back({v.at("node").get<int>(), v.at("inequality").get<int>(), v.at("value").get<double>()});
    }
    for (const auto& n : doc.at("nodes")) {
      r.nodes.push_back({n.at("index").get<int>(), n.at("rho").get<double>(), n.at("d").get<double>(),
                         n.at("q").get<double>(), extended_from_json(n.at("curvature_lower")),
                         extended_from_json(n.at("curvature_upper"))});
    }
    for (const auto& c : doc.at("chords")) {
      ChordReport cr;
      cr.index = c.at("index").get<int>();
      cr.c = c.at("c").get<double>();
      cr.mu = c.at("mu").get<double>();
      cr.xi = c.at("xi").get<double>();
      cr.eta = c.at("eta").get<double>();
      cr.origin = point_from(c.at("origin"), "chord origin");
      cr.width_estimate = c.at("width_estimate").get<double>();
      if (!c.at("width").is_null()) cr.width = c["width"].get<double>();
      if (!c.at("lower").is_null()) cr.lower = curve_from_json(c["lower"]);
      if (!c.at("upper").is_null()) cr.upper = curve_from_json(c["upper"]);
      r.chords.push_back(std::move(cr));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string serialize(const ComplianceReport& report) {
  json doc;
  doc["pass"] = report.pass;
  doc["tolerance"] = report.tolerance;
  doc["worst_margin"] = report.worst_margin;
  doc["unassigned"] = report.unassigned;
  doc["violations"] = report.violations;
  doc["samples"] = json::array();
  for (const auto& s : report.samples) {
    doc["samples"].push_back({{"sample", s.sample},
                              {"chord", s.chord},
                              {"x", s.x},
                              {"y", s.y},
                              {"above_lower", s.above_lower},
                              {"below_upper", s.below_upper}});
  }
  return dump(doc);
}

}  // namespace spiralbound
