#pragma once

#include <memory>
#include <string>

#include "scatinv/polygon.hpp"

namespace scatinv {

struct NamedScatterer {
  std::string name;
  std::shared_ptr<const BoundaryCurve> curve;
};

struct ScattererOptions {
  std::string vertex_file;         // required for name == "polygon"
  double rounding_radius = 0.05;   // corner rounding for polygon shapes
  int polygon_angles = 720;        // radial resampling resolution
};

/// Catalogue of reference scatterers.  Polygonal shapes are corner-rounded
/// and resampled into a C^2 star-shaped spline curve; they are never
/// represented in the reconstruction basis.
inline NamedScatterer named_scatterer(const std::string& name,
                                      const ScattererOptions& options = {}) {
  if (name == "circle") {
    return {name, std::make_shared<CircleCurve>(1.0)};
  }
  if (name == "trefoil") {
    return {name, std::make_shared<TrefoilCurve>(TrefoilLogRadius{})};
  }
  if (name == "kite") {
    return {name, std::make_shared<KiteCurve>()};
  }
  if (name == "hexagon") {
    return {name, polygon_curve(regular_polygon(6, 1.0), options.rounding_radius,
                                options.polygon_angles)};
  }
  if (name == "star5") {
    return {name, polygon_curve(star_polygon(5, 1.3, 0.75),
                                options.rounding_radius, options.polygon_angles)};
  }
  if (name == "polygon") {
    if (options.vertex_file.empty()) {
      throw config_error("named_scatterer: polygon requires a vertex file");
    }
    return {name, polygon_curve(load_polygon(options.vertex_file),
                                options.rounding_radius, options.polygon_angles)};
  }
  throw config_error("named_scatterer: unknown scatterer '" + name + "'");
}

}  // namespace scatinv
