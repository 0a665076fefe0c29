#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hotspots {

// Small fixed-capacity vector/matrix for points, normals and shape operators.
// Size is the spatial dimension (2 or 3); storage stays on the stack.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 3, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;

using SpMat = Eigen::SparseMatrix<double>;

inline Vec make_vec(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

inline Vec make_vec(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

inline Vec zero_vec(int dim) { return Vec::Zero(dim); }

/// Error taxonomy used across the library. `kind()` is stable for tests.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct InvalidInputError : Error {
  explicit InvalidInputError(const std::string& m) : Error("invalid-input", m) {}
};
struct InvalidGeometryError : Error {
  explicit InvalidGeometryError(const std::string& m) : Error("invalid-geometry", m) {}
};
struct UnsupportedDomainError : Error {
  explicit UnsupportedDomainError(const std::string& m) : Error("unsupported-domain", m) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& m) : Error("precondition", m) {}
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& m) : Error("validation", m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("parse", m) {}
};
struct SolverError : Error {
  explicit SolverError(const std::string& m) : Error("solver", m) {}
};

}  // namespace hotspots
