#ifndef SPINCM_TYPES_HPP
#define SPINCM_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace spincm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kImaginaryUnit{0.0, 1.0};

/// Requested algebra family/rank combination is not supported.
struct UnsupportedAlgebra : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operand dimensions do not match the representation.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument sits on a lattice point of an elliptic function.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A phase-space or spectral-parameter configuration hit the singular set.
struct SingularConfiguration : std::domain_error {
  using std::domain_error::domain_error;
};

/// A trajectory approached the singular set; carries the abort time.
struct SingularApproach : std::runtime_error {
  double time;
  explicit SingularApproach(double t, const std::string& what)
      : std::runtime_error(what), time(t) {}
};

/// Invalid integration step parameters.
struct StepError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace spincm

#endif
