#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "scatinv/scatterers.hpp"
#include "scatinv/shape.hpp"

using namespace scatinv;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> random_knots(Rng& rng, int n = 12) {
  std::vector<double> xi(n);
  for (double& v : xi) v = rng.uniform(-0.5, 0.5);
  return xi;
}

}  // namespace

TEST_CASE("zero knots give the unit circle") {
  auto curve = as_boundary_curve(build_spline(std::vector<double>(12, 0.0)));
  CHECK_THAT((curve.position(0.0) - Vec2(1.0, 0.0)).norm(), WithinAbs(0.0, 1e-14));
  CHECK_THAT((curve.d_position(0.0) - Vec2(0.0, 1.0)).norm(), WithinAbs(0.0, 1e-14));
  for (double t : {0.3, 1.9, 4.4}) {
    CHECK_THAT(curve.position(t).norm(), WithinAbs(1.0, 1e-14));
  }
}

TEST_CASE("constant log-2 knots give a circle of radius 2") {
  auto curve = as_boundary_curve(build_spline(std::vector<double>(8, std::log(2.0))));
  for (double t : {0.0, 0.9, 3.3, 6.0}) {
    CHECK_THAT(curve.position(t).norm(), WithinAbs(2.0, 1e-13));
  }
}

TEST_CASE("curve derivatives match finite differences") {
  Rng rng(23);
  auto curve = as_boundary_curve(build_spline(random_knots(rng)));
  const double eps = 1e-5;
  for (int i = 0; i < 24; ++i) {
    const double t = 0.05 + kTwoPi * i / 24.0;
    const Vec2 fd1 = (curve.position(t + eps) - curve.position(t - eps)) / (2 * eps);
    const Vec2 fd2 = (curve.position(t + eps) - 2.0 * curve.position(t) +
                      curve.position(t - eps)) /
                     (eps * eps);
    CHECK_THAT((curve.d_position(t) - fd1).norm(), WithinAbs(0.0, 1e-8));
    CHECK_THAT((curve.dd_position(t) - fd2).norm(), WithinAbs(0.0, 1e-5));
  }
}

TEST_CASE("prior sampling stays in the box and hits the right mean") {
  AnnularPrior prior(-0.5, 0.5, 12);
  Rng rng(101);
  const int draws = 100000;
  std::vector<double> mean(12, 0.0);
  for (int i = 0; i < draws; ++i) {
    auto xi = sample_prior(prior, rng);
    for (int l = 0; l < 12; ++l) {
      REQUIRE(xi[l] >= -0.5);
      REQUIRE(xi[l] <= 0.5);
      mean[l] += xi[l];
    }
  }
  const double se = (1.0 / std::sqrt(12.0)) / std::sqrt(double(draws));
  for (int l = 0; l < 12; ++l) {
    CHECK_THAT(mean[l] / draws, WithinAbs(0.0, 3.0 * se));
  }
}

TEST_CASE("degenerate prior collapses to a point") {
  AnnularPrior prior(0.25, 0.25, 6);
  Rng rng(5);
  for (double v : sample_prior(prior, rng)) CHECK(v == 0.25);
}

TEST_CASE("knot rotation is cyclic") {
  Rng rng(3);
  auto xi = random_knots(rng);
  CHECK(rotate_knots(xi, 0) == xi);
  CHECK(rotate_knots(xi, 12) == xi);
  CHECK(rotate_knots(rotate_knots(xi, 5), 7) == xi);
}

TEST_CASE("knot rotation commutes with curve rotation") {
  Rng rng(31);
  const int n = 12;
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    auto xi = random_knots(rng, n);
    auto base = as_boundary_curve(build_spline(xi));
    for (int j = 0; j < n; ++j) {
      const double theta = kTwoPi * j / n;
      auto rotated = as_boundary_curve(build_spline(rotate_knots(xi, j)));
      const Eigen::Matrix2d r = rotation_matrix(theta);
      for (double t : {0.23, 2.6, 5.0}) {
        const Vec2 expected = r * base.position(t - theta);
        worst = std::max(worst, (rotated.position(t) - expected).norm());
      }
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("center of mass of circles") {
  CircleCurve unit(1.0);
  CHECK_THAT(center_of_mass(unit, 1024).norm(), WithinAbs(0.0, 1e-10));
  CircleCurve shifted(1.0, Vec2(0.3, -0.1));
  const Vec2 com = center_of_mass(shifted, 1024);
  CHECK_THAT(com.x(), WithinAbs(0.3, 1e-8));
  CHECK_THAT(com.y(), WithinAbs(-0.1, 1e-8));
}

TEST_CASE("center of mass matches a refined-resolution oracle on the kite") {
  KiteCurve kite;
  const Vec2 coarse = center_of_mass(kite, 4096);
  const Vec2 fine = center_of_mass(kite, 40960);
  CHECK_THAT((coarse - fine).norm(), WithinAbs(0.0, 1e-6));
}

TEST_CASE("center of mass is translation equivariant") {
  Rng rng(77);
  auto base = std::make_shared<SplineBoundary>(build_spline(random_knots(rng)));
  const Vec2 shift(0.4, -0.25);
  TranslatedCurve moved(base, shift);
  const Vec2 a = center_of_mass(*base, 2048);
  const Vec2 b = center_of_mass(moved, 2048);
  CHECK_THAT((b - a - shift).norm(), WithinAbs(0.0, 1e-10));
}

namespace {

// Degenerate "curve" tracing a segment back and forth: zero enclosed area.
class FlatCurve final : public BoundaryCurve {
 public:
  Vec2 position(double t) const override { return {std::cos(t), 0.0}; }
  Vec2 d_position(double t) const override { return {-std::sin(t), 0.0}; }
  Vec2 dd_position(double t) const override { return {-std::cos(t), 0.0}; }
};

}  // namespace

TEST_CASE("degenerate area is a numeric error") {
  FlatCurve flat;
  CHECK_THROWS_AS(center_of_mass(flat, 1024), numeric_error);
}

TEST_CASE("named scatterers: circle and kite") {
  auto circle = named_scatterer("circle");
  CHECK_THAT(circle.curve->position(1.1).norm(), WithinAbs(1.0, 1e-14));
  auto kite = named_scatterer("kite");
  const double t = 0.83;
  const Vec2 expected(std::cos(t) + 0.65 * std::cos(2 * t) - 0.65, 1.5 * std::sin(t));
  CHECK_THAT((kite.curve->position(t) - expected).norm(), WithinAbs(0.0, 1e-14));
}

TEST_CASE("trefoil matches its log-radius formula") {
  auto trefoil = named_scatterer("trefoil");
  for (double t : {0.0, 0.7, 2.1, 4.9}) {
    CHECK_THAT(trefoil.curve->position(t).norm(),
               WithinAbs(std::exp(0.25 * std::cos(3 * t)), 1e-13));
  }
}

TEST_CASE("rounded hexagon stays near the sharp hexagon") {
  ScattererOptions opt;
  opt.rounding_radius = 0.05;
  auto hex = named_scatterer("hexagon", opt);
  auto vertices = regular_polygon(6, 1.0);
  // every sharp vertex is approached within the rounding radius
  for (const auto& v : vertices) {
    double best = 1e30;
    for (int i = 0; i < 4096; ++i) {
      best = std::min(best, (hex.curve->position(kTwoPi * i / 4096) - v).norm());
    }
    CHECK(best <= 0.05 + 1e-3);
  }
  // curvature is bounded and the parametrization is regular
  double max_curv = 0.0;
  for (int i = 0; i < 4096; ++i) {
    const double t = kTwoPi * i / 4096;
    const Vec2 d = hex.curve->d_position(t);
    const Vec2 dd = hex.curve->dd_position(t);
    REQUIRE(d.norm() > 0.0);
    max_curv = std::max(max_curv,
                        std::abs(d.x() * dd.y() - d.y() * dd.x()) / std::pow(d.norm(), 3));
  }
  CHECK(max_curv < 100.0);
}

TEST_CASE("polygon vertex file round trip") {
  namespace fs = std::filesystem;
  const auto path = fs::temp_directory_path() / "scatinv_test_hexagon.txt";
  {
    std::ofstream out(path);
    out << "# hexagon\n";
    for (const auto& v : regular_polygon(6, 1.0)) {
      out << v.x() << " " << v.y() << "\n";
    }
  }
  ScattererOptions opt;
  opt.vertex_file = path.string();
  auto poly = named_scatterer("polygon", opt);
  auto hex = named_scatterer("hexagon");
  for (double t : {0.1, 1.0, 3.0, 5.5}) {
    CHECK_THAT((poly.curve->position(t) - hex.curve->position(t)).norm(),
               WithinAbs(0.0, 1e-6));
  }
  fs::remove(path);
}

TEST_CASE("unknown names and malformed files are rejected") {
  CHECK_THROWS_AS(named_scatterer("dodecahedron"), config_error);
  CHECK_THROWS_AS(named_scatterer("polygon"), config_error);
  namespace fs = std::filesystem;
  const auto path = fs::temp_directory_path() / "scatinv_test_bad.txt";
  {
    std::ofstream out(path);
    out << "0.0 1.0\nnot numbers\n";
  }
  ScattererOptions opt;
  opt.vertex_file = path.string();
  CHECK_THROWS_AS(named_scatterer("polygon", opt), io_error);
  fs::remove(path);
}

TEST_CASE("star5 is a regular closed curve") {
  auto star = named_scatterer("star5");
  CHECK_THAT((star.curve->position(0.0) - star.curve->position(kTwoPi)).norm(),
             WithinAbs(0.0, 1e-12));
  for (int i = 0; i < 512; ++i) {
    REQUIRE(star.curve->d_position(kTwoPi * i / 512).norm() > 0.0);
  }
}
