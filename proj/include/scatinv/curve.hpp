#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <memory>

#include "scatinv/common.hpp"

namespace scatinv {

using Vec2 = Eigen::Vector2d;

/// Closed 2*pi-periodic parametrized curve with two derivatives; the only
/// geometry view the forward solver sees.  Implementations must be regular
/// (|d_position| > 0 everywhere).
class BoundaryCurve {
 public:
  virtual ~BoundaryCurve() = default;
  virtual Vec2 position(double t) const = 0;
  virtual Vec2 d_position(double t) const = 0;
  virtual Vec2 dd_position(double t) const = 0;
};

class CircleCurve final : public BoundaryCurve {
 public:
  explicit CircleCurve(double radius = 1.0, Vec2 center = Vec2::Zero())
      : radius_(radius), center_(center) {
    if (!(radius > 0.0)) throw config_error("CircleCurve: radius must be > 0");
  }
  Vec2 position(double t) const override {
    return center_ + radius_ * Vec2(std::cos(t), std::sin(t));
  }
  Vec2 d_position(double t) const override {
    return radius_ * Vec2(-std::sin(t), std::cos(t));
  }
  Vec2 dd_position(double t) const override {
    return radius_ * Vec2(-std::cos(t), -std::sin(t));
  }

 private:
  double radius_;
  Vec2 center_;
};

/// (cos t + 0.65 cos 2t - 0.65, 1.5 sin t): the standard kite benchmark.
class KiteCurve final : public BoundaryCurve {
 public:
  Vec2 position(double t) const override {
    return {std::cos(t) + 0.65 * std::cos(2.0 * t) - 0.65, 1.5 * std::sin(t)};
  }
  Vec2 d_position(double t) const override {
    return {-std::sin(t) - 1.3 * std::sin(2.0 * t), 1.5 * std::cos(t)};
  }
  Vec2 dd_position(double t) const override {
    return {-std::cos(t) - 2.6 * std::cos(2.0 * t), -1.5 * std::sin(t)};
  }
};

/// Star-shaped curve r(theta) = exp(s(theta)) from a log-radius profile
/// s with two derivatives.
template <typename LogRadius>
class LogRadialCurve final : public BoundaryCurve {
 public:
  explicit LogRadialCurve(LogRadius s) : s_(std::move(s)) {}

  Vec2 position(double t) const override {
    auto [s, s1, s2] = s_(t);
    (void)s1;
    (void)s2;
    return std::exp(s) * Vec2(std::cos(t), std::sin(t));
  }
  Vec2 d_position(double t) const override {
    auto [s, s1, s2] = s_(t);
    (void)s2;
    const double r = std::exp(s), dr = s1 * r;
    const double c = std::cos(t), sn = std::sin(t);
    return {dr * c - r * sn, dr * sn + r * c};
  }
  Vec2 dd_position(double t) const override {
    auto [s, s1, s2] = s_(t);
    const double r = std::exp(s);
    const double dr = s1 * r;
    const double ddr = (s2 + s1 * s1) * r;
    const double c = std::cos(t), sn = std::sin(t);
    return {ddr * c - 2.0 * dr * sn - r * c, ddr * sn + 2.0 * dr * c - r * sn};
  }

 private:
  LogRadius s_;
};

struct TrefoilLogRadius {
  double amplitude = 0.25;
  std::array<double, 3> operator()(double t) const {
    return {amplitude * std::cos(3.0 * t), -3.0 * amplitude * std::sin(3.0 * t),
            -9.0 * amplitude * std::cos(3.0 * t)};
  }
};

using TrefoilCurve = LogRadialCurve<TrefoilLogRadius>;

class TranslatedCurve final : public BoundaryCurve {
 public:
  TranslatedCurve(std::shared_ptr<const BoundaryCurve> base, Vec2 offset)
      : base_(std::move(base)), offset_(offset) {}
  Vec2 position(double t) const override { return base_->position(t) + offset_; }
  Vec2 d_position(double t) const override { return base_->d_position(t); }
  Vec2 dd_position(double t) const override { return base_->dd_position(t); }

 private:
  std::shared_ptr<const BoundaryCurve> base_;
  Vec2 offset_;
};

/// The point set R_theta * base, parametrized as R_theta * base(t).
class RotatedCurve final : public BoundaryCurve {
 public:
  RotatedCurve(std::shared_ptr<const BoundaryCurve> base, double angle)
      : base_(std::move(base)) {
    rot_ << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  }
  Vec2 position(double t) const override { return rot_ * base_->position(t); }
  Vec2 d_position(double t) const override { return rot_ * base_->d_position(t); }
  Vec2 dd_position(double t) const override { return rot_ * base_->dd_position(t); }

 private:
  std::shared_ptr<const BoundaryCurve> base_;
  Eigen::Matrix2d rot_;
};

inline Eigen::Matrix2d rotation_matrix(double theta) {
  Eigen::Matrix2d r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

}  // namespace scatinv
