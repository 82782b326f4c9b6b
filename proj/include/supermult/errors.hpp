#pragma once

#include <stdexcept>
#include <string>

namespace supermult {

/// Raised when a requested computation would exceed the dense-matrix
/// resource guards (tensor dimension > 4096, channel dimension > 64, ...).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a matrix that must be positive semidefinite has an
/// eigenvalue below -1e-8.
struct NotPsdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace supermult
