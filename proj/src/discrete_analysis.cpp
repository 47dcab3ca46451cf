#include "spiralbound/discrete_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spiralbound/errors.hpp"

namespace spiralbound {

namespace {

constexpr double kDuplicateTolerance = 1e-12;
constexpr double kDegenerateNode = 1e-12;

int sign_with_tolerance(double v, double tol) { return v > tol ? 1 : (v < -tol ? -1 : 0); }

// Half chord vector c * n(mu); zero for pseudo-chords.
Point half_vector(const ChordData& chord) {
  return chord.is_pseudo() ? Point(Point::Zero()) : Point(0.5 * (chord.end - chord.start));
}

NodeData make_node(int index, const ChordData& before, const ChordData& after, double scale) {
  NodeData n;
  n.index = index;
  n.rho = wrap_angle(after.direction - before.direction);
  n.d = (half_vector(before) + half_vector(after)).norm();
  if (n.d < kDegenerateNode * scale) {
    std::ostringstream os;
    os << "node " << index << ": neighbouring points coincide (half-diagonal " << n.d
       << "), cusp-like data";
    throw InadmissibleData(os.str(), index);
  }
  n.q = std::sin(n.rho) / n.d;
  return n;
}

}  // namespace

void validate(const SplineInput& input) {
  const auto n = input.points.size();
  if (n < 3) throw InputError("at least 3 points are required, got " + std::to_string(n));
  if (!input.closed && (!input.tau_start || !input.tau_end)) {
    throw InputError("open data requires both end tangents");
  }
  if (input.closed && (input.tau_start || input.tau_end)) {
    throw InputError("closed data must not carry end tangents");
  }
  Eigen::AlignedBox2d box;
  for (const auto& p : input.points) {
    if (!p.allFinite()) throw InputError("non-finite point coordinate");
    box.extend(p);
  }
  const double min_gap = kDuplicateTolerance * box.diagonal().norm();
  const std::size_t pairs = input.closed ? n : n - 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto& a = input.points[i];
    const auto& b = input.points[(i + 1) % n];
    if ((b - a).norm() <= min_gap) {
      std::ostringstream os;
      os << "points " << i << " and " << (i + 1) % n << " coincide";
      throw InputError(os.str());
    }
  }
}

SplineInput reversed(const SplineInput& input) {
  SplineInput r;
  r.points.assign(input.points.rbegin(), input.points.rend());
  r.closed = input.closed;
  if (input.tau_end) r.tau_start = wrap_angle(*input.tau_end + kPi);
  if (input.tau_start) r.tau_end = wrap_angle(*input.tau_start + kPi);
  return r;
}

SplineInput reflected(const SplineInput& input) {
  SplineInput r = input;
  for (auto& p : r.points) p.y() = -p.y();
  if (r.tau_start) r.tau_start = wrap_angle(-*r.tau_start);
  if (r.tau_end) r.tau_end = wrap_angle(-*r.tau_end);
  return r;
}

ChordSet::ChordSet(std::vector<ChordData> chords, bool closed, ChordData pseudo_start, ChordData pseudo_end)
    : chords_(std::move(chords)),
      closed_(closed),
      pseudo_start_(std::move(pseudo_start)),
      pseudo_end_(std::move(pseudo_end)) {}

const ChordData& ChordSet::operator[](int j) const {
  const int m = size();
  if (closed_) return chords_[static_cast<std::size_t>(((j % m) + m) % m)];
  if (j == -1) return pseudo_start_;
  if (j == m) return pseudo_end_;
  if (j < -1 || j > m) throw DomainError("chord index " + std::to_string(j) + " out of range");
  return chords_[static_cast<std::size_t>(j)];
}

ChordSet build_chords(const SplineInput& input) {
  validate(input);
  const auto& pts = input.points;
  const int n = static_cast<int>(pts.size());
  const int m = input.closed ? n : n - 1;
  std::vector<ChordData> chords;
  chords.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    ChordData ch;
    ch.index = j;
    ch.start = pts[static_cast<std::size_t>(j)];
    ch.end = pts[static_cast<std::size_t>((j + 1) % n)];
    const Point d = ch.end - ch.start;
    ch.half_length = 0.5 * d.norm();
    ch.direction = std::atan2(d.y(), d.x());
    chords.push_back(ch);
  }
  ChordData first, last;
  if (!input.closed) {
    first.index = -1;
    first.direction = wrap_angle(*input.tau_start);
    first.start = first.end = pts.front();
    last.index = m;
    last.direction = wrap_angle(*input.tau_end);
    last.start = last.end = pts.back();
  }
  return ChordSet(std::move(chords), input.closed, first, last);
}

std::vector<NodeData> node_data(const ChordSet& chords) {
  double scale = 0.0;
  for (const auto& ch : chords.real()) scale = std::max(scale, ch.half_length);
  std::vector<NodeData> nodes;
  nodes.reserve(static_cast<std::size_t>(chords.node_count()));
  for (int i = 0; i < chords.node_count(); ++i) nodes.push_back(make_node(i, chords[i - 1], chords[i], scale));
  return nodes;
}

std::vector<ChordAngles> xi_eta(const ChordSet& chords, std::span<const NodeData> nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<ChordAngles> out;
  out.reserve(static_cast<std::size_t>(chords.size()));
  for (int j = 0; j < chords.size(); ++j) {
    const double c = chords[j].half_length;
    const NodeData& start = nodes[static_cast<std::size_t>(j)];
    const NodeData& end = nodes[static_cast<std::size_t>((j + 1) % n)];
    ChordAngles a;
    a.index = j;
    a.sin_xi = -c * start.q;
    a.cos_xi = (chords[j - 1].half_length + c * std::cos(start.rho)) / start.d;
    a.sin_eta = c * end.q;
    a.cos_eta = (chords[j + 1].half_length + c * std::cos(end.rho)) / end.d;
    a.xi = std::atan2(a.sin_xi, a.cos_xi);
    a.eta = std::atan2(a.sin_eta, a.cos_eta);
    out.push_back(a);
  }
  return out;
}

std::string Lim180Violation::describe() const {
  std::ostringstream os;
  os << "node " << node << ": "
     << (inequality == 1 ? "c[i-1] + c[i] cos(rho)" : "c[i] + c[i-1] cos(rho)") << " = " << value
     << " < 0 (a 3-point arc exceeds a half-turn)";
  return os.str();
}

std::vector<Lim180Violation> check_lim180(const ChordSet& chords, std::span<const NodeData> nodes) {
  double scale = 0.0;
  for (const auto& ch : chords.real()) scale = std::max(scale, ch.half_length);
  const double tol = 1e-12 * scale;
  std::vector<Lim180Violation> out;
  for (const auto& node : nodes) {
    const double before = chords[node.index - 1].half_length;
    const double after = chords[node.index].half_length;
    const double cr = std::cos(node.rho);
    const double first = before + after * cr;
    const double second = after + before * cr;
    if (first < -tol) out.push_back({node.index, 1, first});
    if (second < -tol) out.push_back({node.index, 2, second});
  }
  return out;
}

Classification classify(std::span<const NodeData> nodes, std::span<const Lim180Violation> violations,
                        bool closed) {
  Classification cls;
  cls.q.reserve(nodes.size());
  for (const auto& n : nodes) cls.q.push_back(n.q);
  cls.violations.assign(violations.begin(), violations.end());
  if (!violations.empty()) {
    cls.kind = Classification::Kind::inadmissible;
    return cls;
  }

  const int n = static_cast<int>(cls.q.size());
  double qmax = 0.0;
  for (double q : cls.q) qmax = std::max(qmax, std::abs(q));
  const double tol = kCurvatureTieTolerance * qmax;

  // step[i] = trend from node i to node i+1 (cyclic for closed data).
  const int steps = closed ? n : n - 1;
  std::vector<int> step(static_cast<std::size_t>(steps));
  bool any_up = false, any_down = false;
  for (int i = 0; i < steps; ++i) {
    step[static_cast<std::size_t>(i)] = sign_with_tolerance(cls.q[static_cast<std::size_t>((i + 1) % n)] -
                                                                cls.q[static_cast<std::size_t>(i)],
                                                            tol);
    any_up |= step[static_cast<std::size_t>(i)] > 0;
    any_down |= step[static_cast<std::size_t>(i)] < 0;
  }
  if (!any_up && !any_down) {
    cls.trend = Trend::constant;
    return cls;
  }
  if (!closed && !(any_up && any_down)) {
    cls.trend = any_up ? Trend::increasing : Trend::decreasing;
    return cls;
  }

  cls.kind = Classification::Kind::piecewise_spiral;
  auto step_at = [&](int i) { return step[static_cast<std::size_t>(((i % steps) + steps) % steps)]; };

  // Walk runs of equal q. For closed data start right after a strict step so
  // that no run wraps past the starting point.
  int first = 0;
  if (closed) {
    while (step_at(first - 1) == 0) ++first;
  }
  int prev_rep = -100;
  for (int visited = 0; visited < n;) {
    const int start = first + visited;
    int len = 1;
    while (visited + len < n && step_at(start + len - 1) == 0 && (closed || start + len - 1 < steps)) ++len;
    visited += len;

    const bool has_left = closed || start > 0;
    const bool has_right = closed || start + len - 1 < n - 1;
    if (!has_left || !has_right) continue;
    const int left = step_at(start - 1);
    const int right = step_at(start + len - 1);
    if (left == 0 || right == 0 || left == right) continue;

    // First plateau node, moved right when that keeps a node between this
    // vertex and the previous one.
    int rep = std::max(start, prev_rep + 2);
    if (rep > start + len - 1) rep = start;
    prev_rep = rep;
    cls.vertices.push_back({closed ? rep % n : rep, left > 0 ? VertexKind::maximum : VertexKind::minimum, len});
  }
  std::sort(cls.vertices.begin(), cls.vertices.end(), [](const Vertex& a, const Vertex& b) { return a.node < b.node; });

  const auto count = cls.vertices.size();
  for (std::size_t k = 0; k + 1 < count || (closed && count > 1 && k < count); ++k) {
    const Vertex& a = cls.vertices[k];
    const Vertex& b = cls.vertices[(k + 1) % count];
    const int gap = ((b.node - a.node) % n + n) % n;
    if (gap == 1) {
      std::ostringstream os;
      os << "vertices at nodes " << a.node << " and " << b.node
         << " are adjacent; at least one node must separate neighbouring vertices";
      throw InadmissibleData(os.str(), b.node);
    }
  }
  return cls;
}

std::vector<CurvaturePlotPoint> discrete_curvature_plot(std::span<const Point> samples) {
  if (samples.size() < 3) throw InputError("curvature plot needs at least 3 samples");
  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) scale = std::max(scale, (samples[i + 1] - samples[i]).norm());
  std::vector<CurvaturePlotPoint> out;
  out.reserve(samples.size() - 2);
  double s = (samples[1] - samples[0]).norm();
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const Point before = samples[i] - samples[i - 1];
    const Point after = samples[i + 1] - samples[i];
    const double rho = wrap_angle(std::atan2(after.y(), after.x()) - std::atan2(before.y(), before.x()));
    const double d = 0.5 * (before + after).norm();
    if (d < kDegenerateNode * scale || before.norm() == 0.0 || after.norm() == 0.0) {
      throw InadmissibleData("sample " + std::to_string(i) + ": degenerate triple", static_cast<int>(i));
    }
    out.push_back({s, std::sin(rho) / d});
    s += after.norm();
  }
  return out;
}

DiscreteAnalysis analyze(const SplineInput& input) {
  ChordSet chords = build_chords(input);
  auto nodes = node_data(chords);
  auto angles = xi_eta(chords, nodes);
  auto violations = check_lim180(chords, nodes);
  auto cls = classify(nodes, violations, input.closed);
  return DiscreteAnalysis{input, std::move(chords), std::move(nodes), std::move(angles), std::move(violations),
                          std::move(cls)};
}

}  // namespace spiralbound
