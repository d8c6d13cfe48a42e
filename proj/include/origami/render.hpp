#pragma once

#include "origami/conics.hpp"

#include <string>
#include <utility>
#include <vector>

namespace origami::render {

struct Viewport {
  ExactReal xmin, ymin, xmax, ymax;  // requires xmin < xmax and ymin < ymax
};

// Labelled objects in draw order within each layer.
struct Scene {
  std::vector<std::pair<std::string, conics::Conic>> conics;
  std::vector<std::pair<std::string, geom::Line>> lines;
  std::vector<std::pair<std::string, geom::Point>> points;
};

// Deterministic SVG document: layers in the order conics, lines, points,
// labels.  Lines are clipped to the viewport in exact arithmetic; pixel
// coordinates come from 64-bit refinement.  Conic branches are sampled at 512
// positions per viewport span (rendering precision only).  Throws
// EmptyViewport when the viewport has no area.
std::string render_svg(const Scene& scene, const Viewport& vp, int width, int height);

}  // namespace origami::render
