#pragma once

#include <stdexcept>
#include <string>

namespace spiralbound {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside a primitive's contract (|phi| > pi/2, |x| > c, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or incomplete input data: parse failures, duplicate points,
/// missing tangents. Maps to CLI exit code 3.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Well-formed data for which no bound can be built: Lim180 violations,
/// cusp-like nodes, adjacent vertices, wrong grade for the data.
/// Maps to CLI exit code 2.
class InadmissibleData : public Error {
 public:
  InadmissibleData(const std::string& what, int node = -1) : Error(what), node_(node) {}
  int node() const { return node_; }

 private:
  int node_;
};

/// The tangency condition has no solution with p >= 0 for the requested
/// curvature, or user curvature overrides contradict computed bounds.
class InfeasibleCurvature : public InadmissibleData {
 public:
  using InadmissibleData::InadmissibleData;
};

}  // namespace spiralbound
