#pragma once

#include <map>
#include <optional>
#include <string>

#include "linepat/subdivision.hpp"

namespace linepat {

// A rectangular window in the Euclidean plane, in drawing units.
struct ViewBox {
  Rational xmin, ymin, xmax, ymax;
};

struct RenderConfig {
  int width_px = 800;
  // When absent, the window is fitted to the subdivision's vertices (or to
  // the points of the lines closest to the origin when there are none).
  std::optional<ViewBox> viewbox;
  // Fill colors per side count, e.g. {3, "#cce5ff"}.  Cells whose side count
  // has no entry are left unfilled unless shade_5plus highlights them.
  std::map<int, std::string> shade;
  // Highlight bounded cells with five or more sides.
  bool shade_5plus = true;
  std::string highlight = "#f4a6a6";
  // Annotate each line with its coefficient pair.
  bool labels = false;
};

// Renders the subdivision as a standalone SVG document.  All coordinates are
// computed with exact rational arithmetic and emitted with six decimals, so
// the output is identical across runs and platforms.
std::string render_svg(const Subdivision& sub, const RenderConfig& config);

}  // namespace linepat
