#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pseudospec {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Malformed numerical input: non-square, non-finite, mismatched dimensions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request outside what an operation supports (e.g. two non-Hermitian
/// matrices handed to the Clifford localizer).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Configuration error; `what()` starts with the JSON path of the offending
/// field, e.g. `grid.axes[1].steps: must be >= 2`.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace pseudospec
