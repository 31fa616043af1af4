#include "isonemal/render.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "isonemal/enumeration.hpp"

namespace isonemal {

namespace {

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

struct AxisInfo {
  bool mirror = false;
  bool mirror_tau = false;
  bool glide_e = false;
  bool glide_tau = false;
  bool mirror_position = true;
};

// Diagonal axes y = x + c (half-cell units), c reduced modulo the box side.
std::map<int, AxisInfo> diagonal_axes(const GroupSpec& g, int n) {
  const OpGroup group(g.generators, n);
  int step = 2 * n;
  for (const auto& a : group.elements()) {
    if (a.linear == Linear::identity) step = std::gcd(step, (a.shift.x + a.shift.y) / 2);
  }
  std::map<int, AxisInfo> axes;
  for (const auto& a : group.elements()) {
    if (a.linear != Linear::diag) continue;
    const OpClass c = classify(a);
    AxisInfo& info = axes[mod(c.offset, n)];
    info.mirror_position = c.mirror_position.value_or(false);
    if (mod(c.glide, step) == 0) {
      info.mirror = true;
      info.mirror_tau = info.mirror_tau || a.tau;
    } else if (a.tau) {
      info.glide_tau = true;
    } else {
      info.glide_e = true;
    }
  }
  return axes;
}

}  // namespace

std::string render_svg(const Design& d, const std::optional<GroupSpec>& group,
                       const RenderSpec& spec) {
  const int n = d.size();
  const int px = spec.cell_px;
  const int side = n * px;
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" "
      "viewBox=\"0 0 {0} {0}\">\n",
      side);
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{0}\" fill=\"{1}\"/>\n", side,
                     spec.pale);
  for (int y = n - 1; y >= 0; --y) {
    for (int x = 0; x < n; ++x) {
      if (!d.dark(x, y)) continue;
      out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
                         x * px, (n - 1 - y) * px, px, px, spec.dark);
    }
  }
  if (!group) {
    out += "</svg>\n";
    return out;
  }
  // Half-cell units to pixels, y pointing down.
  auto sx = [&](double u) { return u * px / 2.0; };
  auto sy = [&](double u) { return side - u * px / 2.0; };
  auto line = [&](double x0, double y0, double x1, double y1, const std::string& style) {
    out += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" {}/>\n",
                       sx(x0), sy(y0), sx(x1), sy(y1), style);
  };
  if (spec.mirrors || spec.glide_axes) {
    const int box = 2 * n;
    for (const auto& [c0, info] : diagonal_axes(*group, n)) {
      for (int c = c0 - 2 * box; c <= box; c += n) {
        const double x0 = std::max(0, -c);
        const double x1 = std::min(box, box - c);
        if (x1 <= x0) continue;
        if (spec.mirrors && info.mirror) {
          line(x0, x0 + c, x1, x1 + c, "stroke=\"#d62728\" stroke-width=\"2\"");
        }
        if (spec.glide_axes && (info.glide_e || info.glide_tau)) {
          const std::string colour = info.mirror_position ? "#1f77b4" : "#7fb2dd";
          if (info.glide_tau) {
            line(x0, x0 + c, x1, x1 + c,
                 fmt::format("stroke=\"{}\" stroke-width=\"3\" stroke-dasharray=\"8 4\"", colour));
          }
          if (info.glide_e) {
            line(x0, x0 + c, x1, x1 + c,
                 fmt::format("stroke=\"{}\" stroke-width=\"5\" stroke-dasharray=\"8 4\"", colour));
            line(x0, x0 + c, x1, x1 + c,
                 "stroke=\"#ffffff\" stroke-width=\"2\" stroke-dasharray=\"8 4\"");
          }
        }
      }
    }
  }
  auto unit = [&](const LatticeUnit& u, const std::string& style) {
    const QCoord a = u.anchor;
    const QCoord b{a.x + 2 * u.side_a.x, a.y + 2 * u.side_a.y};
    const QCoord c{b.x + 2 * u.side_b.x, b.y + 2 * u.side_b.y};
    const QCoord e{a.x + 2 * u.side_b.x, a.y + 2 * u.side_b.y};
    out += fmt::format(
        "<polygon points=\"{:.1f},{:.1f} {:.1f},{:.1f} {:.1f},{:.1f} {:.1f},{:.1f}\" "
        "fill=\"none\" {}/>\n",
        sx(a.x), sy(a.y), sx(b.x), sy(b.y), sx(c.x), sy(c.y), sx(e.x), sy(e.y), style);
  };
  if (spec.g1_unit) unit(group->g1_unit, "stroke=\"#2ca02c\" stroke-width=\"1\"");
  if (spec.h1_unit) {
    unit(group->h1_unit, "stroke=\"#9467bd\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
  }
  out += "</svg>\n";
  return out;
}

}  // namespace isonemal
