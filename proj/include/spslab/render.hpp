#pragma once

#include "spslab/lamps.hpp"

namespace spslab {

struct RenderOptions {
  std::string lit_lamp;   // foot id of a lamp whose lit set gets shaded
  bool labels = true;
  std::vector<std::array<std::string, 2>> grey_cells; // (bottom, top) id pairs
};

std::string render_svg(const RectDiagram& d, const RenderOptions& opts = {});
std::string render_tikz(const RectDiagram& d, const RenderOptions& opts = {});

} // namespace spslab
