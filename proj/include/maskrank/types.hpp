#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace maskrank {

// 64-bit floats throughout; gradient checking needs the precision headroom.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Norm guard: far below any meaningful embedding norm, catches true degeneracy only.
inline constexpr double kNormEpsilon = 1e-12;

/// Base class for all engine errors. The CLI prints the message verbatim to
/// stderr and exits 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument value violates a precondition (non-positive temperature,
/// out-of-range label index, non-normalized distribution, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Dimensions of tensors that must agree do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Numerically degenerate input (zero-norm vector, empty mask).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Malformed file contents.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace maskrank
