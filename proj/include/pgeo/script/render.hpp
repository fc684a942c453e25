#ifndef PGEO_SCRIPT_RENDER_HPP
#define PGEO_SCRIPT_RENDER_HPP

#include <string>

#include "pgeo/script/eval.hpp"

namespace pgeo::script {

struct Viewport {
  double x0 = -5, y0 = -5, x1 = 5, y1 = 5;
};

/// SVG of the affine chart z = 1: named points as labeled disks, lines clipped
/// to the viewport, conics as polylines through exactly-sampled locus points,
/// points at infinity as labeled boundary arrows.
std::string render_svg_text(const Env& env, const Viewport& vp);

/// Writes render_svg_text to a file; throws IoError.
void render_svg(const Env& env, const std::string& path, const Viewport& vp);

}  // namespace pgeo::script

#endif
