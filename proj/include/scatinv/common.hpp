#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace scatinv {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

/// Invalid configuration or input metadata (caller error).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure (degenerate geometry, non-finite values, ...).
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear-system failure inside the boundary-integral solver.
class solver_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

/// File-format or serialization failure.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scatinv
