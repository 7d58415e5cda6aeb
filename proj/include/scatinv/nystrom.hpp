#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "scatinv/common.hpp"
#include "scatinv/curve.hpp"
#include "scatinv/shape.hpp"
#include "scatinv/specfun.hpp"

namespace scatinv {

struct NystromConfig {
  int n = 100;      // quadrature uses 2n+2 equispaced nodes on [0, 2pi]
  double k = kPi;   // wavenumber

  void validate() const {
    if (n < 8) throw config_error("NystromConfig: n must be >= 8");
    if (!(k > 0.0)) throw config_error("NystromConfig: k must be > 0");
  }
  int num_nodes() const { return 2 * n + 2; }
};

struct DensitySolution {
  std::vector<double> nodes;    // parameter values t_j
  Eigen::VectorXcd values;      // phi at the nodes
};

struct FarField {
  std::vector<Vec2> directions;
  Eigen::VectorXcd values;
};

struct IntensityMatrix {
  Eigen::MatrixXd values;  // n_obs x n_inc, |u_inf|^2
  std::vector<Vec2> obs_directions;
  std::vector<Vec2> inc_directions;
};

namespace detail {

struct NodeGeometry {
  std::vector<double> t;
  std::vector<Vec2> pos;
  std::vector<Vec2> normal;   // unnormalized outward normal (x2', -x1')
  std::vector<double> speed;  // |x'|
  std::vector<double> cross;  // x1' x2'' - x2' x1''

  static NodeGeometry build(const BoundaryCurve& curve, int num_nodes) {
    NodeGeometry g;
    g.t.resize(num_nodes);
    g.pos.resize(num_nodes);
    g.normal.resize(num_nodes);
    g.speed.resize(num_nodes);
    g.cross.resize(num_nodes);
    for (int j = 0; j < num_nodes; ++j) {
      const double t = kTwoPi * j / num_nodes;
      const Vec2 p = curve.position(t);
      const Vec2 dp = curve.d_position(t);
      const Vec2 ddp = curve.dd_position(t);
      g.t[j] = t;
      g.pos[j] = p;
      g.normal[j] = Vec2(dp.y(), -dp.x());
      g.speed[j] = dp.norm();
      g.cross[j] = dp.x() * ddp.y() - dp.y() * ddp.x();
      if (!(g.speed[j] > 0.0) || !p.allFinite()) {
        throw numeric_error("NystromSystem: curve parametrization is not regular");
      }
    }
    return g;
  }
};

/// Quadrature weights for the 2*pi-periodic logarithmic kernel
/// ln(4 sin^2((t - tau)/2)) at equispaced nodes; exact for trigonometric
/// polynomials of degree < half the node count.
inline std::vector<double> log_weights(int num_nodes) {
  const int half = num_nodes / 2;
  std::vector<double> w(num_nodes);
  for (int d = 0; d < num_nodes; ++d) {
    double s = 0.0;
    for (int m = 1; m < half; ++m) {
      s += std::cos(m * kTwoPi * d / num_nodes) / m;
    }
    const double parity = (d % 2 == 0) ? 1.0 : -1.0;
    w[d] = -kTwoPi / half * s - kPi / (static_cast<double>(half) * half) * parity;
  }
  return w;
}

}  // namespace detail

/// Assembled and factorized combined-field system for one (curve, config)
/// pair; solves are cheap per incident direction.
///
/// The scattered field is represented as (double layer - ik single layer)
/// applied to a density phi, which satisfies
///   phi + 2 K phi = -2 u_inc  on the boundary.
/// The kernel is split as K1 * ln(4 sin^2((t - tau)/2)) + K2 with smooth K1,
/// K2 and the log factor integrated by its exact trigonometric weights.
class NystromSystem {
 public:
  NystromSystem(const BoundaryCurve& curve, const NystromConfig& cfg)
      : cfg_(cfg) {
    cfg.validate();
    const int nn = cfg.num_nodes();
    geo_ = detail::NodeGeometry::build(curve, nn);
    const auto logw = detail::log_weights(nn);
    const double h = kTwoPi / nn;
    const double k = cfg.k;
    const std::complex<double> ik(0.0, k);

    Eigen::MatrixXcd a(nn, nn);
    for (int i = 0; i < nn; ++i) {
      for (int j = 0; j < nn; ++j) {
        if (i == j) {
          const std::complex<double> c1(0.0, k / kTwoPi * geo_.speed[i]);
          const std::complex<double> c2 =
              -geo_.cross[i] / (kTwoPi * geo_.speed[i] * geo_.speed[i]) +
              (0.5 * k +
               std::complex<double>(0.0, k / kPi) *
                   (kEulerGamma + std::log(0.5 * k * geo_.speed[i]))) *
                  geo_.speed[i];
          a(i, i) = 1.0 + logw[0] * c1 + h * c2;
          continue;
        }
        const Vec2 diff = geo_.pos[j] - geo_.pos[i];
        const double r = diff.norm();
        const double kr = k * r;
        const double dot = diff.dot(geo_.normal[j]);
        const auto h0 = specfun::hankel1(0, kr);
        const auto h1 = specfun::hankel1(1, kr);
        const std::complex<double> full =
            -0.5 * ik * h1 * (dot / r) + 0.5 * k * h0 * geo_.speed[j];
        const std::complex<double> c1 =
            k / kTwoPi * h1.real() * (dot / r) +
            std::complex<double>(0.0, k / kTwoPi) * h0.real() * geo_.speed[j];
        const double half_diff = 0.5 * (geo_.t[i] - geo_.t[j]);
        const double logterm = std::log(4.0 * std::pow(std::sin(half_diff), 2));
        const std::complex<double> c2 = full - c1 * logterm;
        a(i, j) = logw[(i - j + nn) % nn] * c1 + h * c2;
      }
    }
    lu_.compute(a);
    rcond_ = lu_.rcond();
    if (!(rcond_ > 1e-12)) {
      throw solver_error("NystromSystem: system is ill-conditioned (rcond " +
                         std::to_string(rcond_) + ")");
    }
  }

  const NystromConfig& config() const { return cfg_; }
  double rcond() const { return rcond_; }

  DensitySolution solve(const Vec2& incident_dir) const {
    const int nn = cfg_.num_nodes();
    Eigen::VectorXcd b(nn);
    for (int i = 0; i < nn; ++i) {
      const double phase = cfg_.k * geo_.pos[i].dot(incident_dir);
      b(i) = -2.0 * std::exp(std::complex<double>(0.0, phase));
    }
    Eigen::VectorXcd phi = lu_.solve(b);
    if (!phi.allFinite()) {
      throw solver_error("NystromSystem: non-finite density solution");
    }
    return DensitySolution{geo_.t, std::move(phi)};
  }

  std::complex<double> far_field_value(const DensitySolution& density,
                                       const Vec2& obs_dir) const {
    const double k = cfg_.k;
    const int nn = cfg_.num_nodes();
    const double h = kTwoPi / nn;
    const std::complex<double> pref =
        std::exp(std::complex<double>(0.0, kPi / 4.0)) / std::sqrt(8.0 * kPi * k);
    std::complex<double> sum(0.0, 0.0);
    for (int j = 0; j < nn; ++j) {
      const double geom = obs_dir.dot(geo_.normal[j]) + geo_.speed[j];
      const double phase = -k * obs_dir.dot(geo_.pos[j]);
      sum += geom * std::exp(std::complex<double>(0.0, phase)) * density.values(j);
    }
    return pref * std::complex<double>(0.0, -k) * h * sum;
  }

  FarField far_field(const DensitySolution& density,
                     const std::vector<Vec2>& obs_dirs) const {
    FarField ff;
    ff.directions = obs_dirs;
    ff.values.resize(static_cast<Eigen::Index>(obs_dirs.size()));
    for (std::size_t i = 0; i < obs_dirs.size(); ++i) {
      ff.values(static_cast<Eigen::Index>(i)) = far_field_value(density, obs_dirs[i]);
    }
    return ff;
  }

 private:
  NystromConfig cfg_;
  detail::NodeGeometry geo_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  double rcond_ = 0.0;
};

inline DensitySolution assemble_and_solve(const BoundaryCurve& curve,
                                          const NystromConfig& cfg,
                                          const Vec2& incident_dir) {
  return NystromSystem(curve, cfg).solve(incident_dir);
}

/// Far-field evaluation needs the node geometry only, not the operator.
inline FarField far_field(const BoundaryCurve& curve, const NystromConfig& cfg,
                          const DensitySolution& density,
                          const std::vector<Vec2>& obs_dirs) {
  cfg.validate();
  const int nn = cfg.num_nodes();
  if (static_cast<int>(density.values.size()) != nn) {
    throw config_error("far_field: density does not match the configuration");
  }
  const auto geo = detail::NodeGeometry::build(curve, nn);
  const double k = cfg.k;
  const double h = kTwoPi / nn;
  const std::complex<double> pref =
      std::exp(std::complex<double>(0.0, kPi / 4.0)) / std::sqrt(8.0 * kPi * k);
  FarField ff;
  ff.directions = obs_dirs;
  ff.values.resize(static_cast<Eigen::Index>(obs_dirs.size()));
  for (std::size_t i = 0; i < obs_dirs.size(); ++i) {
    std::complex<double> sum(0.0, 0.0);
    for (int j = 0; j < nn; ++j) {
      const double geom = obs_dirs[i].dot(geo.normal[j]) + geo.speed[j];
      const double phase = -k * obs_dirs[i].dot(geo.pos[j]);
      sum += geom * std::exp(std::complex<double>(0.0, phase)) * density.values(j);
    }
    ff.values(static_cast<Eigen::Index>(i)) =
        pref * std::complex<double>(0.0, -k) * h * sum;
  }
  return ff;
}

/// Phaseless intensities f_ij = |u_inf(x_i; d_j)|^2.  The operator is
/// assembled and factorized once; each incident direction is one solve.
inline IntensityMatrix forward_intensity(const BoundaryCurve& curve,
                                         const NystromConfig& cfg,
                                         const std::vector<Vec2>& inc_dirs,
                                         const std::vector<Vec2>& obs_dirs) {
  NystromSystem system(curve, cfg);
  IntensityMatrix out;
  out.obs_directions = obs_dirs;
  out.inc_directions = inc_dirs;
  out.values.resize(static_cast<Eigen::Index>(obs_dirs.size()),
                    static_cast<Eigen::Index>(inc_dirs.size()));
  for (std::size_t j = 0; j < inc_dirs.size(); ++j) {
    const auto density = system.solve(inc_dirs[j]);
    for (std::size_t i = 0; i < obs_dirs.size(); ++i) {
      out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::norm(system.far_field_value(density, obs_dirs[i]));
    }
  }
  return out;
}

/// Relative sup-norm difference between the reference-direction intensity
/// vectors computed at discretization n and n + 5.
inline double self_convergence_error(const std::vector<double>& xi,
                                     const NystromConfig& cfg,
                                     const Vec2& reference_dir,
                                     const std::vector<Vec2>& obs_dirs) {
  GradedSplineBoundary curve = graded_boundary_curve(build_spline(xi));
  NystromConfig finer = cfg;
  finer.n = cfg.n + 5;
  const auto coarse = forward_intensity(curve, cfg, {reference_dir}, obs_dirs);
  const auto fine = forward_intensity(curve, finer, {reference_dir}, obs_dirs);
  const double ref = fine.values.cwiseAbs().maxCoeff();
  if (!(ref > 0.0)) {
    throw numeric_error("self_convergence_error: zero-norm reference");
  }
  return (coarse.values - fine.values).cwiseAbs().maxCoeff() / ref;
}

}  // namespace scatinv
