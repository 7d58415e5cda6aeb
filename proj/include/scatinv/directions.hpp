#pragma once

#include <vector>

#include "scatinv/curve.hpp"

namespace scatinv {

/// Incident plane-wave directions d_j = -(cos, sin)(2*pi*(j-1)/n), so the
/// reference direction d_1 is (-1, 0).
inline std::vector<Vec2> incident_directions(int n_inc) {
  if (n_inc < 1) throw config_error("incident_directions: n_inc must be >= 1");
  std::vector<Vec2> d(n_inc);
  for (int j = 0; j < n_inc; ++j) {
    const double a = kTwoPi * j / n_inc;
    d[j] = -Vec2(std::cos(a), std::sin(a));
  }
  return d;
}

/// Equispaced observation directions x_i = (cos, sin)(2*pi*(i-1)/n).
inline std::vector<Vec2> observation_directions(int n_obs) {
  if (n_obs < 1) throw config_error("observation_directions: n_obs must be >= 1");
  std::vector<Vec2> x(n_obs);
  for (int i = 0; i < n_obs; ++i) {
    const double a = kTwoPi * i / n_obs;
    x[i] = Vec2(std::cos(a), std::sin(a));
  }
  return x;
}

}  // namespace scatinv
