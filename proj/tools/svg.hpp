#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ale/conic_pencil.hpp"

namespace ale::cli {

struct SvgEllipse {
  double cx = 0.0;
  double cy = 0.0;
  double rx = 1.0;
  double ry = 1.0;
  double angle_deg = 0.0;  // rotation of the rx axis, counterclockwise
  std::string stroke = "black";
};

// Affine-chart ellipse of a real conic; absent for other real types and for
// complex matrices.
std::optional<SvgEllipse> ellipse_of(const Conic& c);

struct Scene {
  std::vector<SvgEllipse> ellipses;
  std::vector<std::array<double, 2>> chain;  // vertices in order, start repeated at the end if closed
  bool closed = false;
  bool complex = false;  // chain has non-real vertices, drawn by real parts
  double gap = 0.0;      // residual between the last vertex and the start
};

// SVG 1.1 document; the y axis points up in the scene and down in the output.
std::string emit_svg(const Scene& scene);

}  // namespace ale::cli
