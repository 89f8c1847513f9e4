#pragma once

#include <string>

#include "multinet/arrangement.hpp"

namespace multinet {

struct RenderOptions {
  char chart = 'z';   // the coordinate set to 1
  double span = 4.0;  // width of the square viewport, centered at the origin
  int pixels = 600;
};

/// SVG 1.1 picture of a real arrangement in an affine chart. Lines are
/// colored by block and clipped to the viewport; the line at infinity, if
/// present, is drawn as a dashed frame and base points at infinity sit on that
/// frame. Base points are drawn with a radius growing with n_p. Output bytes
/// depend only on the input. Throws NonRealArrangement if some line
/// coordinate is not real, and InvalidParams for a bad chart or span.
std::string render_svg(const MultinetCandidate& a, const RenderOptions& opts = {});

}  // namespace multinet
