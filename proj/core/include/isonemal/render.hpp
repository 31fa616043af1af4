#pragma once

#include <optional>
#include <string>

#include "isonemal/design.hpp"
#include "isonemal/species.hpp"

namespace isonemal {

struct RenderSpec {
  int cell_px = 20;
  bool mirrors = false;
  /// Glide axes; side-reversing ones are drawn filled, side-preserving ones
  /// hollow, and axes out of mirror position lighter.
  bool glide_axes = false;
  bool g1_unit = false;
  bool h1_unit = false;
  std::string dark = "#1a1a1a";
  std::string pale = "#ffffff";
};

/// SVG picture of one period box, top row first. Overlays need `group`.
std::string render_svg(const Design& d, const std::optional<GroupSpec>& group,
                       const RenderSpec& spec = {});

}  // namespace isonemal
