#pragma once

#include <complex>
#include <vector>

#include "scatinv/common.hpp"
#include "scatinv/curve.hpp"
#include "scatinv/specfun.hpp"

namespace scatinv {

namespace detail {

/// J_0..J_nmax by Miller's downward recurrence, normalized against J_0.
inline std::vector<double> bessel_j_sequence(int nmax, double x) {
  if (x == 0.0) {
    std::vector<double> out(nmax + 1, 0.0);
    out[0] = 1.0;
    return out;
  }
  const int start = nmax + 16 + static_cast<int>(x);
  std::vector<double> tmp(start + 2, 0.0);
  tmp[start + 1] = 0.0;
  tmp[start] = 1e-30;
  for (int m = start; m >= 1; --m) {
    tmp[m - 1] = (2.0 * m / x) * tmp[m] - tmp[m + 1];
    if (std::abs(tmp[m - 1]) > 1e280) {
      for (int q = m - 1; q <= start + 1; ++q) tmp[q] *= 1e-280;
    }
  }
  const double scale = specfun::bessel_j(0, x) / tmp[0];
  std::vector<double> out(nmax + 1);
  for (int m = 0; m <= nmax; ++m) out[m] = tmp[m] * scale;
  return out;
}

/// Y_0..Y_nmax by the (stable) upward recurrence.
inline std::vector<double> bessel_y_sequence(int nmax, double x) {
  std::vector<double> out(nmax + 1);
  out[0] = specfun::bessel_y(0, x);
  if (nmax >= 1) out[1] = specfun::bessel_y(1, x);
  for (int m = 1; m < nmax; ++m) {
    out[m + 1] = (2.0 * m / x) * out[m] - out[m - 1];
  }
  return out;
}

}  // namespace detail

/// Far field of a sound-soft circle of radius a centered at the origin under
/// the plane wave exp(ik x.d), by separation of variables:
///   u_inf(x) = sqrt(2/(pi k)) e^{-i pi/4} [a_0 + 2 sum_m a_m cos(m phi)],
/// with a_m = -J_m(ka)/H^(1)_m(ka) and phi the angle between x and d.
inline std::vector<std::complex<double>> circle_far_field(
    double k, double radius, const Vec2& incident_dir,
    const std::vector<Vec2>& obs_dirs, int n_modes = 60) {
  if (!(k > 0.0) || !(radius > 0.0)) {
    throw config_error("circle_far_field: k and radius must be > 0");
  }
  const double ka = k * radius;
  const auto jm = detail::bessel_j_sequence(n_modes, ka);
  const auto ym = detail::bessel_y_sequence(n_modes, ka);
  std::vector<std::complex<double>> coeff(n_modes + 1);
  for (int m = 0; m <= n_modes; ++m) {
    coeff[m] = -jm[m] / std::complex<double>(jm[m], ym[m]);
  }
  const double theta_d = std::atan2(incident_dir.y(), incident_dir.x());
  const std::complex<double> pref =
      std::sqrt(2.0 / (kPi * k)) * std::exp(std::complex<double>(0.0, -kPi / 4.0));
  std::vector<std::complex<double>> out(obs_dirs.size());
  for (std::size_t i = 0; i < obs_dirs.size(); ++i) {
    const double phi = std::atan2(obs_dirs[i].y(), obs_dirs[i].x()) - theta_d;
    std::complex<double> sum = coeff[0];
    for (int m = 1; m <= n_modes; ++m) {
      sum += 2.0 * coeff[m] * std::cos(m * phi);
    }
    out[i] = pref * sum;
  }
  return out;
}

}  // namespace scatinv
