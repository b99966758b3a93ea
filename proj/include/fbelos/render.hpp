#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "fbelos/belos.hpp"
#include "fbelos/geometry.hpp"

namespace fbelos::render {

struct Overlays {
  std::optional<double> point_parallelogram;  // x0
  bool mean_parallelogram = false;
  bool tangent_parallelogram = false;
  bool circumcircle = false;
  bool diagonal = false;
  bool labels = false;
};

struct Canvas {
  double width = 800;
  double height = 480;
  double margin = 24;
};

struct Scene {
  FBelos fbelos;
  Overlays overlays;
  std::size_t samples_per_arc = 512;
  Canvas canvas;
};

/// Math coordinates (y up) to SVG user units (y down):
/// X = tx + s * x, Y = ty - s * y.
struct Transform {
  double scale = 1;
  double tx = 0;
  double ty = 0;

  Point2 apply(Point2 p) const { return {tx + scale * p.x, ty - scale * p.y}; }
};

/// The transform render_svg uses for this scene: the bounding box of every
/// drawn element, uniformly scaled and centred inside the margins.
Transform fit(const Scene& scene);

/// Deterministic SVG 1.1 document. Throws BadParameter for an invalid scene
/// and OverlayUnavailable when an overlay's precondition fails.
std::string render_svg(const Scene& scene);

/// Parses an overlay list such as "tangent,circumcircle,point=0.3,labels".
Overlays parse_overlays(const std::string& list);

}  // namespace fbelos::render
