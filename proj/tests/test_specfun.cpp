#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "scatinv/common.hpp"
#include "scatinv/specfun.hpp"
#include "support/reference_values.hpp"

using namespace scatinv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("bessel_j at the origin") {
  CHECK(specfun::bessel_j(0, 0.0) == 1.0);
  CHECK(specfun::bessel_j(1, 0.0) == 0.0);
}

TEST_CASE("bessel_j vanishes at the first zero of J0") {
  CHECK_THAT(specfun::bessel_j(0, refvals::kJ0FirstZero), WithinAbs(0.0, 1e-12));
}

TEST_CASE("bessel_y near the origin and at the first zero of Y0") {
  CHECK(specfun::bessel_y(0, 1e-6) < -8.0);
  CHECK_THAT(specfun::bessel_y(0, refvals::kY0FirstZero), WithinAbs(0.0, 1e-12));
}

TEST_CASE("bessel_y matches the high-precision oracle at x = 1") {
  CHECK_THAT(specfun::bessel_y(1, 1.0), WithinRel(refvals::kY1AtOne, 1e-12));
}

TEST_CASE("frozen oracle grid on [1e-8, 200]") {
  for (const auto& row : refvals::kBesselGrid) {
    CAPTURE(row.x);
    CHECK_THAT(specfun::bessel_j(0, row.x),
               WithinRel(row.j0, 1e-12) || WithinAbs(row.j0, 1e-13));
    CHECK_THAT(specfun::bessel_j(1, row.x),
               WithinRel(row.j1, 1e-12) || WithinAbs(row.j1, 1e-13));
    CHECK_THAT(specfun::bessel_y(0, row.x),
               WithinRel(row.y0, 1e-12) || WithinAbs(row.y0, 1e-13));
    CHECK_THAT(specfun::bessel_y(1, row.x),
               WithinRel(row.y1, 1e-12) || WithinAbs(row.y1, 1e-13));
  }
}

TEST_CASE("hankel1 is J + iY and matches the oracle at x = 1") {
  for (double x : {0.3, 1.0, 4.2, 9.5, 60.0}) {
    for (int order : {0, 1}) {
      auto h = specfun::hankel1(order, x);
      CHECK(h.real() == specfun::bessel_j(order, x));
      CHECK(h.imag() == specfun::bessel_y(order, x));
    }
  }
  auto h = specfun::hankel1(0, 1.0);
  CHECK_THAT(h.real(), WithinRel(refvals::kH0AtOne.real(), 1e-12));
  CHECK_THAT(h.imag(), WithinRel(refvals::kH0AtOne.imag(), 1e-12));
}

TEST_CASE("Wronskian identity J1 Y0 - J0 Y1 = 2/(pi x)") {
  for (int i = 0; i < 100; ++i) {
    const double x = std::pow(10.0, -3.0 + 5.0 * i / 99.0);
    const double w = specfun::bessel_j(1, x) * specfun::bessel_y(0, x) -
                     specfun::bessel_j(0, x) * specfun::bessel_y(1, x);
    CAPTURE(x);
    CHECK_THAT(w, WithinRel(2.0 / (kPi * x), 1e-11));
  }
}

TEST_CASE("series and asymptotic branches agree at the split") {
  const double x = specfun::detail::kSeriesSplit;
  auto mp0 = specfun::detail::modulus_phase(0, x);
  auto mp1 = specfun::detail::modulus_phase(1, x);
  CHECK_THAT(specfun::detail::j0_series(x),
             WithinAbs(mp0.modulus * std::cos(mp0.phase), 1e-11));
  CHECK_THAT(specfun::detail::y0_series(x),
             WithinAbs(mp0.modulus * std::sin(mp0.phase), 1e-11));
  CHECK_THAT(specfun::detail::j1_series(x),
             WithinAbs(mp1.modulus * std::cos(mp1.phase), 1e-11));
  CHECK_THAT(specfun::detail::y1_series(x),
             WithinAbs(mp1.modulus * std::sin(mp1.phase), 1e-11));
}

TEST_CASE("asymptotic magnitude of H0") {
  for (double x : {100.0, 140.0, 200.0}) {
    const double m = std::abs(specfun::hankel1(0, x)) * std::sqrt(kPi * x / 2.0);
    CHECK_THAT(m, WithinAbs(1.0, 1e-3));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(specfun::bessel_j(0, -1.0), std::domain_error);
  CHECK_THROWS_AS(specfun::bessel_j(0, std::nan("")), std::domain_error);
  CHECK_THROWS_AS(specfun::bessel_j(2, 1.0), std::domain_error);
  CHECK_THROWS_AS(specfun::bessel_y(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::bessel_y(1, -0.5), std::domain_error);
  CHECK_THROWS_AS(specfun::hankel1(0, 0.0), std::domain_error);
}
