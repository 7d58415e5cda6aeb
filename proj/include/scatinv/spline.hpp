#pragma once

#include <cmath>
#include <vector>

#include "scatinv/common.hpp"

namespace scatinv {

/// C^2 periodic cubic interpolant through values at equispaced knots
/// theta_l = 2*pi*l/n on [0, 2*pi).  The knot second derivatives solve the
/// cyclic tridiagonal continuity system, here via a Sherman-Morrison
/// correction of two Thomas sweeps.
class PeriodicCubicSpline {
 public:
  struct Eval {
    double value;
    double d1;
    double d2;
  };

  explicit PeriodicCubicSpline(std::vector<double> knot_values)
      : values_(std::move(knot_values)) {
    const int n = static_cast<int>(values_.size());
    if (n < 4) {
      throw config_error("PeriodicCubicSpline: need at least 4 knots");
    }
    for (double v : values_) {
      if (!std::isfinite(v)) {
        throw config_error("PeriodicCubicSpline: knot values must be finite");
      }
    }
    h_ = kTwoPi / n;
    moments_ = solve_moments(values_, h_);
  }

  int size() const { return static_cast<int>(values_.size()); }
  double spacing() const { return h_; }
  const std::vector<double>& knot_values() const { return values_; }
  const std::vector<double>& moments() const { return moments_; }

  Eval operator()(double theta) const {
    const int n = size();
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    int i = static_cast<int>(t / h_);
    if (i >= n) i = n - 1;
    const int j = (i + 1) % n;
    const double a = ((i + 1) * h_ - t) / h_;  // left weight
    const double b = (t - i * h_) / h_;
    const double h2over6 = h_ * h_ / 6.0;
    Eval out;
    out.value = a * values_[i] + b * values_[j] +
                ((a * a * a - a) * moments_[i] + (b * b * b - b) * moments_[j]) *
                    h2over6;
    out.d1 = (values_[j] - values_[i]) / h_ +
             ((3.0 * b * b - 1.0) * moments_[j] - (3.0 * a * a - 1.0) * moments_[i]) *
                 h_ / 6.0;
    out.d2 = a * moments_[i] + b * moments_[j];
    return out;
  }

 private:
  static std::vector<double> solve_moments(const std::vector<double>& y,
                                           double h) {
    const int n = static_cast<int>(y.size());
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) {
      const double yl = y[(i + n - 1) % n];
      const double yr = y[(i + 1) % n];
      rhs[i] = 6.0 * (yr - 2.0 * y[i] + yl) / (h * h);
    }
    // Cyclic system with stencil (1, 4, 1).  Corner entries are folded in
    // through the rank-one update u v^T with u = (gamma, 0, .., 1),
    // v = (1, 0, .., 1/gamma).
    const double diag = 4.0, off = 1.0, gamma = -diag;
    std::vector<double> d(n, diag);
    d[0] = diag - gamma;
    d[n - 1] = diag - off * off / gamma;
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = off;
    auto x1 = thomas(d, off, rhs);
    auto x2 = thomas(d, off, u);
    const double num = x1[0] + x1[n - 1] * off / gamma;
    const double den = 1.0 + x2[0] + x2[n - 1] * off / gamma;
    const double factor = num / den;
    for (int i = 0; i < n; ++i) x1[i] -= factor * x2[i];
    return x1;
  }

  // Thomas solve for a constant-coefficient tridiagonal (d_i on the
  // diagonal, `off` on both off-diagonals, no wrap-around).
  static std::vector<double> thomas(const std::vector<double>& d, double off,
                                    const std::vector<double>& rhs) {
    const int n = static_cast<int>(d.size());
    std::vector<double> c(n, 0.0), x(n, 0.0);
    c[0] = off / d[0];
    x[0] = rhs[0] / d[0];
    for (int i = 1; i < n; ++i) {
      const double m = d[i] - off * c[i - 1];
      c[i] = off / m;
      x[i] = (rhs[i] - off * x[i - 1]) / m;
    }
    for (int i = n - 2; i >= 0; --i) x[i] -= c[i] * x[i + 1];
    return x;
  }

  std::vector<double> values_;
  std::vector<double> moments_;
  double h_ = 0.0;
};

}  // namespace scatinv
