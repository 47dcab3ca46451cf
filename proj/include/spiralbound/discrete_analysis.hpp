#pragma once

// Discrete spline quantities of a point set: chords, turning angles, 3-point
// curvatures, the xi/eta tangent estimates, admissibility and the
// spiral / piecewise-spiral classification.
//
// Indexing is zero-based. With N points, node i is point i. Chord j joins
// node j to node j+1 (mod N when closed), so open data has M = N-1 chords
// and closed data M = N. For open data chord -1 and chord M are zero-length
// pseudo-chords carrying the end tangents. Node i sits between chord i-1 and
// chord i.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spiralbound/core_geometry.hpp"

namespace spiralbound {

struct SplineInput {
  std::vector<Point> points;
  std::optional<double> tau_start;  ///< global tangent angle at the first point
  std::optional<double> tau_end;    ///< global tangent angle at the last point
  bool closed = false;
};

/// Throws InputError unless: N >= 3; consecutive points (including last-first
/// for closed data) are further apart than 1e-12 of the bounding-box
/// diagonal; open data has both tangents; closed data has none.
void validate(const SplineInput& input);

/// Same data traversed backwards: points reversed, end tangents swapped and
/// turned by pi.
SplineInput reversed(const SplineInput& input);

/// Mirror image about the x-axis: y and tangent angles change sign, so does
/// every signed curvature.
SplineInput reflected(const SplineInput& input);

struct ChordData {
  int index = 0;
  double half_length = 0.0;  ///< c_j; zero for pseudo-chords
  double direction = 0.0;    ///< mu_j
  Point start = Point::Zero();
  Point end = Point::Zero();

  bool is_pseudo() const { return half_length == 0.0; }
  /// Throws DomainError for pseudo-chords.
  ChordFrame frame() const { return ChordFrame(0.5 * (start + end), direction, half_length); }
};

class ChordSet {
 public:
  ChordSet(std::vector<ChordData> chords, bool closed, ChordData pseudo_start, ChordData pseudo_end);

  /// Number of real chords M.
  int size() const { return static_cast<int>(chords_.size()); }
  int node_count() const { return closed_ ? size() : size() + 1; }
  bool closed() const { return closed_; }

  /// Chord j; j = -1 and j = M give the pseudo-chords of open data, closed
  /// data wraps modulo M.
  const ChordData& operator[](int j) const;
  const std::vector<ChordData>& real() const { return chords_; }

 private:
  std::vector<ChordData> chords_;
  bool closed_;
  ChordData pseudo_start_;
  ChordData pseudo_end_;
};

ChordSet build_chords(const SplineInput& input);

struct NodeData {
  int index = 0;
  double rho = 0.0;  ///< turning angle wrap(mu_i - mu_{i-1})
  double d = 0.0;    ///< half-diagonal |P_{i-1} P_{i+1}| / 2
  double q = 0.0;    ///< signed 3-point curvature sin(rho) / d
};

/// Throws InadmissibleData (with the node index) when d < 1e-12 times the
/// largest chord.
std::vector<NodeData> node_data(const ChordSet& chords);

struct ChordAngles {
  int index = 0;
  double xi = 0.0;
  double eta = 0.0;
  double sin_xi = 0.0, cos_xi = 1.0;
  double sin_eta = 0.0, cos_eta = 1.0;
};

std::vector<ChordAngles> xi_eta(const ChordSet& chords, std::span<const NodeData> nodes);

struct Lim180Violation {
  int node = 0;
  int inequality = 1;  ///< 1: c_{i-1} + c_i cos rho_i >= 0,  2: c_i + c_{i-1} cos rho_i >= 0
  double value = 0.0;  ///< the offending left-hand side

  std::string describe() const;
};

std::vector<Lim180Violation> check_lim180(const ChordSet& chords, std::span<const NodeData> nodes);

enum class Trend { increasing, decreasing, constant };
enum class VertexKind { minimum, maximum };

struct Vertex {
  int node = 0;  ///< representative node (first node of a plateau)
  VertexKind kind = VertexKind::minimum;
  int plateau_length = 1;
};

struct Classification {
  enum class Kind { spiral, piecewise_spiral, inadmissible };
  Kind kind = Kind::spiral;
  Trend trend = Trend::constant;  ///< meaningful for spirals
  std::vector<Vertex> vertices;
  std::vector<Lim180Violation> violations;
  std::vector<double> q;

  bool is_spiral() const { return kind == Kind::spiral; }
};

/// q values closer than 1e-12 * max|q| count as equal.
inline constexpr double kCurvatureTieTolerance = 1e-12;

/// Inadmissible when violations exist; a spiral when q is monotone
/// (non-strictly); otherwise a piecewise spiral whose vertices are the strict
/// local extrema of q, interior nodes only for open data, cyclic for closed.
/// Throws InadmissibleData when two vertices cannot be separated by a node.
Classification classify(std::span<const NodeData> nodes, std::span<const Lim180Violation> violations,
                        bool closed);

struct CurvaturePlotPoint {
  double arc_length = 0.0;  ///< accumulated chord length at the sample
  double q = 0.0;
};

/// 3-point curvature at every interior sample of a polyline.
std::vector<CurvaturePlotPoint> discrete_curvature_plot(std::span<const Point> samples);

/// Everything above, computed once.
struct DiscreteAnalysis {
  SplineInput input;
  ChordSet chords;
  std::vector<NodeData> nodes;
  std::vector<ChordAngles> angles;
  std::vector<Lim180Violation> violations;
  Classification classification;
};

DiscreteAnalysis analyze(const SplineInput& input);

}  // namespace spiralbound
