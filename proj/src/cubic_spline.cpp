#include "spiralbound/cubic_spline.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>

#include "spiralbound/errors.hpp"

namespace spiralbound {

ChordLengthCubicSpline::ChordLengthCubicSpline(std::span<const Point> nodes, const Point& start_derivative,
                                               const Point& end_derivative)
    : nodes_(nodes.begin(), nodes.end()) {
  const auto n = nodes_.size();
  if (n < 2) throw InputError("cubic spline needs at least 2 nodes");
  knots_.resize(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double h = (nodes_[i] - nodes_[i - 1]).norm();
    if (h == 0.0) throw InputError("cubic spline nodes " + std::to_string(i - 1) + " and " + std::to_string(i) + " coincide");
    knots_[i] = knots_[i - 1] + h;
  }

  // Tridiagonal system for the second derivatives M_i, clamped ends.
  const auto size = static_cast<Eigen::Index>(n);
  std::vector<Eigen::Triplet<double>> entries;
  Eigen::MatrixX2d rhs(size, 2);
  auto h = [&](std::size_t i) { return knots_[i + 1] - knots_[i]; };
  auto slope = [&](std::size_t i) -> Point { return (nodes_[i + 1] - nodes_[i]) / h(i); };
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    Point b;
    if (i == 0) {
      entries.emplace_back(r, r, 2.0 * h(0));
      entries.emplace_back(r, r + 1, h(0));
      b = 6.0 * (slope(0) - start_derivative);
    } else if (i == n - 1) {
      entries.emplace_back(r, r - 1, h(i - 1));
      entries.emplace_back(r, r, 2.0 * h(i - 1));
      b = 6.0 * (end_derivative - slope(i - 1));
    } else {
      entries.emplace_back(r, r - 1, h(i - 1));
      entries.emplace_back(r, r, 2.0 * (h(i - 1) + h(i)));
      entries.emplace_back(r, r + 1, h(i));
      b = 6.0 * (slope(i) - slope(i - 1));
    }
    rhs.row(r) = b.transpose();
  }
  Eigen::SparseMatrix<double> a(size, size);
  a.setFromTriplets(entries.begin(), entries.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.compute(a);
  if (solver.info() != Eigen::Success) throw InputError("cubic spline system is singular");
  const Eigen::MatrixX2d m = solver.solve(rhs);
  second_.resize(n);
  for (std::size_t i = 0; i < n; ++i) second_[i] = m.row(static_cast<Eigen::Index>(i)).transpose();
}

std::size_t ChordLengthCubicSpline::segment(double t) const {
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - knots_.begin() - 1, 0));
  return std::min(idx, knots_.size() - 2);
}

Point ChordLengthCubicSpline::operator()(double t) const {
  t = std::clamp(t, 0.0, length());
  const std::size_t i = segment(t);
  const double h = knots_[i + 1] - knots_[i];
  const double u = knots_[i + 1] - t;
  const double v = t - knots_[i];
  return second_[i] * (u * u * u / (6.0 * h)) + second_[i + 1] * (v * v * v / (6.0 * h)) +
         (nodes_[i] / h - second_[i] * (h / 6.0)) * u + (nodes_[i + 1] / h - second_[i + 1] * (h / 6.0)) * v;
}

Point ChordLengthCubicSpline::derivative(double t) const {
  t = std::clamp(t, 0.0, length());
  const std::size_t i = segment(t);
  const double h = knots_[i + 1] - knots_[i];
  const double u = knots_[i + 1] - t;
  const double v = t - knots_[i];
  return -second_[i] * (u * u / (2.0 * h)) + second_[i + 1] * (v * v / (2.0 * h)) + (nodes_[i + 1] - nodes_[i]) / h -
         (second_[i + 1] - second_[i]) * (h / 6.0);
}

std::vector<Point> cubic_spline_fixture(const SplineInput& input, int samples_per_chord) {
  validate(input);
  if (input.closed) throw InputError("the cubic spline fixture needs open data with end tangents");
  if (samples_per_chord < 1) throw InputError("samples per chord must be positive");
  const ChordLengthCubicSpline spline(input.points, unit(*input.tau_start), unit(*input.tau_end));
  const auto& knots = spline.knots();
  std::vector<Point> out;
  out.reserve((knots.size() - 1) * static_cast<std::size_t>(samples_per_chord) + 1);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    for (int k = 0; k < samples_per_chord; ++k) {
      out.push_back(spline(knots[i] + (knots[i + 1] - knots[i]) * k / samples_per_chord));
    }
  }
  out.push_back(input.points.back());
  return out;
}

}  // namespace spiralbound
