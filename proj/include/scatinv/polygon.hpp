#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scatinv/common.hpp"
#include "scatinv/shape.hpp"

namespace scatinv {

/// Plain-text vertex file: one "x y" pair per line, counterclockwise,
/// implicitly closed.  Blank lines and '#' comments are skipped.
inline std::vector<Vec2> load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("load_polygon: cannot open " + path);
  std::vector<Vec2> vertices;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    double x, y;
    if (!(ss >> x)) continue;  // blank
    if (!(ss >> y) || !std::isfinite(x) || !std::isfinite(y)) {
      throw io_error("load_polygon: malformed line " + std::to_string(lineno) +
                     " in " + path);
    }
    double extra;
    if (ss >> extra) {
      throw io_error("load_polygon: malformed line " + std::to_string(lineno) +
                     " in " + path);
    }
    vertices.emplace_back(x, y);
  }
  if (vertices.size() < 3) {
    throw io_error("load_polygon: fewer than 3 vertices in " + path);
  }
  return vertices;
}

namespace detail {

struct ArcPiece {
  Vec2 center;
  double radius;
  double angle0;  // angle of the start point about the center
  double sweep;   // signed sweep; end angle = angle0 + sweep
};

struct SegmentPiece {
  Vec2 a;
  Vec2 b;
};

struct RoundedOutline {
  std::vector<SegmentPiece> segments;
  std::vector<ArcPiece> arcs;
};

inline double polygon_signed_area(const std::vector<Vec2>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    a += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * a;
}

/// Replaces every corner by a circular arc tangent to both adjacent edges.
/// The requested radius is shrunk where an edge is too short for the
/// tangent offsets.
inline RoundedOutline round_corners(std::vector<Vec2> vertices, double radius) {
  if (polygon_signed_area(vertices) < 0.0) {
    std::reverse(vertices.begin(), vertices.end());
  }
  const int n = static_cast<int>(vertices.size());
  RoundedOutline out;
  std::vector<Vec2> start(n), end(n);  // trimmed edge endpoints around vertex i
  for (int i = 0; i < n; ++i) {
    const Vec2& prev = vertices[(i + n - 1) % n];
    const Vec2& v = vertices[i];
    const Vec2& next = vertices[(i + 1) % n];
    const Vec2 u_in = (v - prev).normalized();
    const Vec2 u_out = (next - v).normalized();
    const double turn = std::atan2(u_in.x() * u_out.y() - u_in.y() * u_out.x(),
                                   u_in.dot(u_out));
    if (std::abs(turn) < 1e-12) {
      start[i] = end[i] = v;
      continue;
    }
    const double max_offset =
        0.49 * std::min((v - prev).norm(), (next - v).norm());
    double rho = radius;
    double offset = rho * std::abs(std::tan(0.5 * turn));
    if (offset > max_offset) {
      offset = max_offset;
      rho = offset / std::abs(std::tan(0.5 * turn));
    }
    const Vec2 a = v - offset * u_in;
    const Vec2 b = v + offset * u_out;
    const Vec2 n_in = turn > 0 ? Vec2(-u_in.y(), u_in.x()) : Vec2(u_in.y(), -u_in.x());
    const Vec2 center = a + rho * n_in;
    const double ang_a = std::atan2(a.y() - center.y(), a.x() - center.x());
    out.arcs.push_back({center, rho, ang_a, turn});
    start[i] = a;
    end[i] = b;
  }
  for (int i = 0; i < n; ++i) {
    out.segments.push_back({end[i], start[(i + 1) % n]});
  }
  return out;
}

inline void ray_hits(const RoundedOutline& outline, double theta,
                     std::vector<double>& hits) {
  hits.clear();
  const Vec2 d(std::cos(theta), std::sin(theta));
  for (const auto& seg : outline.segments) {
    const Vec2 e = seg.b - seg.a;
    const double det = d.x() * (-e.y()) - d.y() * (-e.x());
    if (std::abs(det) < 1e-14) continue;
    const double s = (seg.a.x() * (-e.y()) - seg.a.y() * (-e.x())) / det;
    const double u = (d.x() * seg.a.y() - d.y() * seg.a.x()) / det;
    if (s > 0.0 && u >= -1e-12 && u <= 1.0 + 1e-12) hits.push_back(s);
  }
  for (const auto& arc : outline.arcs) {
    const double b = d.dot(arc.center);
    const double c = arc.center.squaredNorm() - arc.radius * arc.radius;
    const double disc = b * b - c;
    if (disc < 0.0) continue;
    const double root = std::sqrt(disc);
    for (double s : {b - root, b + root}) {
      if (s <= 0.0) continue;
      const Vec2 p = s * d;
      double ang = std::atan2(p.y() - arc.center.y(), p.x() - arc.center.x());
      double rel = ang - arc.angle0;
      rel -= kTwoPi * std::floor(rel / kTwoPi);  // [0, 2pi)
      if (arc.sweep >= 0.0 ? rel <= arc.sweep + 1e-12
                           : rel - kTwoPi >= arc.sweep - 1e-12) {
        hits.push_back(s);
      }
    }
  }
}

}  // namespace detail

/// Radial profile of a rounded polygon sampled on `n_angles` equispaced
/// angles.  The outline must be star-shaped about the origin (every ray must
/// hit it); the outermost hit is used.
inline std::vector<double> rounded_polygon_radii(const std::vector<Vec2>& vertices,
                                                 double rounding_radius,
                                                 int n_angles) {
  auto outline = detail::round_corners(vertices, rounding_radius);
  std::vector<double> radii(n_angles);
  std::vector<double> hits;
  for (int i = 0; i < n_angles; ++i) {
    detail::ray_hits(outline, kTwoPi * i / n_angles, hits);
    if (hits.empty()) {
      throw config_error(
          "rounded_polygon_radii: polygon is not star-shaped about the origin");
    }
    radii[i] = *std::max_element(hits.begin(), hits.end());
  }
  return radii;
}

/// C^2 star-shaped curve for a polygon: circular-arc corner rounding, then
/// a periodic cubic spline through the log-radii at `n_angles` samples.
inline std::shared_ptr<const BoundaryCurve> polygon_curve(
    const std::vector<Vec2>& vertices, double rounding_radius = 0.05,
    int n_angles = 720) {
  auto radii = rounded_polygon_radii(vertices, rounding_radius, n_angles);
  std::vector<double> log_r(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) log_r[i] = std::log(radii[i]);
  return make_spline_curve(std::move(log_r));
}

inline std::vector<Vec2> regular_polygon(int sides, double circumradius,
                                         double phase = 0.0) {
  std::vector<Vec2> v(sides);
  for (int i = 0; i < sides; ++i) {
    const double a = phase + kTwoPi * i / sides;
    v[i] = circumradius * Vec2(std::cos(a), std::sin(a));
  }
  return v;
}

inline std::vector<Vec2> star_polygon(int points, double outer, double inner,
                                      double phase = 0.0) {
  std::vector<Vec2> v(2 * points);
  for (int i = 0; i < 2 * points; ++i) {
    const double a = phase + kPi * i / points;
    const double r = (i % 2 == 0) ? outer : inner;
    v[i] = r * Vec2(std::cos(a), std::sin(a));
  }
  return v;
}

}  // namespace scatinv
