// weave: command-line front end for the isonemal library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "isonemal/analysis.hpp"
#include "isonemal/catalog.hpp"
#include "isonemal/enumeration.hpp"
#include "isonemal/render.hpp"
#include "isonemal/species.hpp"

namespace {

using namespace isonemal;

constexpr int kInvalid = 2;
constexpr int kCapExceeded = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SpeciesTag tag_or_throw(const std::string& s) {
  auto t = parse_species(s);
  if (!t) throw UsageError("unknown species tag '" + s + "'");
  return *t;
}

EquivalencePolicy policy_or_throw(const std::string& s) {
  auto p = parse_policy(s);
  if (!p) throw UsageError("unknown policy '" + s + "'");
  return *p;
}

Design read_design(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

GroupSpec group_or_throw(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("--group expects tag,ell,w");
  try {
    return group_for({tag_or_throw(parts[0]), std::stoi(parts[1]), std::stoi(parts[2])});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void print_family(const FamilyResult& r) {
  const auto& s = r.stats;
  std::cout << fmt::format("family {}  order {}  period {}  free orbits {}\n",
                           to_string(r.spec.params), r.spec.order, r.spec.period_area,
                           s.free_count);
  std::cout << fmt::format(
      "colourings {}  extra-symmetric {}  duplicates {}  falls-apart skipped {}  emitted {}\n",
      s.colorings, s.extra_symmetric, s.duplicates, s.falls_apart, s.emitted);
  for (const auto& e : r.entries) {
    const auto name = known_name(e.species, e.design);
    std::cout << fmt::format("  #{:<8} order {:>3}  genus {:<5} isonemal {:<3} hangs {:<3} {}{}\n",
                             e.coloring, e.order, to_string(e.genus), e.isonemal ? "yes" : "no",
                             e.hangs ? "yes" : "no", e.twill ? "twill " + *e.twill : "",
                             name ? "  " + *name : "");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isonemal prefabric designs with parallel symmetry axes"};
  app.require_subcommand(1);

  auto* species = app.add_subcommand("species", "Species parameters");
  species->require_subcommand(1);
  std::string tag;
  int ell = 0;
  int w = 0;
  auto* check = species->add_subcommand("check", "Validate species parameters");
  check->add_option("tag", tag)->required();
  check->add_option("ell", ell)->required();
  check->add_option("w", w)->required();
  int order = 0;
  auto* list_order = species->add_subcommand("list-order", "Candidate families of an order");
  list_order->add_option("N", order)->required();

  auto* family = app.add_subcommand("family", "Families of designs");
  family->require_subcommand(1);
  auto* enumerate = family->add_subcommand("enum", "Enumerate one family");
  bool falls_apart = false;
  std::string policy_text = "views";
  std::string out_dir;
  std::uint64_t cap = std::uint64_t{1} << 24;
  enumerate->add_option("tag", tag)->required();
  enumerate->add_option("ell", ell)->required();
  enumerate->add_option("w", w)->required();
  enumerate->add_flag("--falls-apart", falls_apart, "Keep prefabrics that fall apart");
  enumerate->add_option("--policy", policy_text, "views (default), views+mirror, translations+complement, ...");
  enumerate->add_option("--out", out_dir, "Directory for design files");
  enumerate->add_option("--cap", cap, "Largest number of colourings to scan");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Report on a design file");
  analyze->add_option("file", file)->required();

  auto* transform = app.add_subcommand("transform", "Double or halve a design");
  std::string mode;
  int factor = 0;
  int anchor_x = 0;
  int anchor_y = 0;
  transform->add_option("mode", mode)->required()->check(CLI::IsMember({"double", "halve"}));
  transform->add_option("file", file)->required();
  transform->add_option("-k", factor, "Keep only this factor (1 to 4)")->check(CLI::Range(1, 4));
  transform->add_option("--anchor-x", anchor_x, "Block anchor column parity")->check(CLI::Range(0, 1));
  transform->add_option("--anchor-y", anchor_y, "Block anchor row parity")->check(CLI::Range(0, 1));

  auto* cat = app.add_subcommand("catalog", "All designs of one order");
  bool falls_apart_only = false;
  cat->add_option("N", order)->required();
  cat->add_flag("--falls-apart-only", falls_apart_only, "Only species 3, 6, 9 prefabrics that fall apart");
  cat->add_option("--policy", policy_text, "views (default), views+mirror, translations+complement, ...");
  cat->add_option("--out", out_dir, "Directory for design files and summary.tsv");
  cat->add_option("--cap", cap, "Largest number of colourings to scan per family");

  auto* render = app.add_subcommand("render", "Draw a design as SVG");
  std::string group_text;
  std::vector<std::string> overlays;
  std::string output;
  int cell_px = 20;
  render->add_option("file", file)->required();
  render->add_option("--group", group_text, "tag,ell,w of the group to overlay");
  render->add_option("--overlays", overlays, "mirrors, glides, g1, h1")
      ->delimiter(',')
      ->check(CLI::IsMember({"mirrors", "glides", "g1", "h1"}));
  render->add_option("-o", output, "Output file")->required();
  render->add_option("--cell-px", cell_px, "Cell size in pixels")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (check->parsed()) {
      const ParamVerdict v = validate_params(tag_or_throw(tag), ell, w);
      if (v.ok()) {
        std::cout << "ok\n";
      } else {
        std::cout << "rejected\n";
        for (const auto& r : v.violations) std::cout << "  " << r.rule << ": " << r.detail << '\n';
      }
      return v.ok() ? 0 : kInvalid;
    }
    if (list_order->parsed()) {
      if (order <= 4) throw UsageError("orders of 4 or less are out of scope");
      for (const auto& p : candidates_for_order(order)) std::cout << to_string(p) << '\n';
      return 0;
    }
    if (enumerate->parsed()) {
      const SpeciesParams p{tag_or_throw(tag), ell, w};
      GroupSpec spec;
      try {
        spec = group_for(p);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      EnumerationOptions o;
      o.policy = policy_or_throw(policy_text);
      o.include_falling_apart = falls_apart;
      o.cap = cap;
      const FamilyResult r = enumerate_family(spec, o);
      print_family(r);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        int seq = 0;
        for (const auto& e : r.entries) {
          std::ofstream f(std::filesystem::path(out_dir) /
                          fmt::format("{}-{}.txt", to_string(p), ++seq));
          f << "# " << to_string(p) << " policy " << to_string(o.policy) << '\n'
            << serialize(e.design);
        }
      }
      return 0;
    }
    if (analyze->parsed()) {
      const Design d = read_design(file);
      const GenusReport g = genus_of(d);
      const FullGroup fg = full_symmetry_group(d);
      std::cout << "order " << order_of(d) << '\n';
      std::cout << "genus " << to_string(g.genus);
      if (g.offset_i) std::cout << "  offset(I) " << *g.offset_i;
      if (g.offset_ii) std::cout << "  offset(II) " << *g.offset_ii;
      std::cout << '\n';
      std::cout << "isonemal " << (is_isonemal(d) ? "yes" : "no") << '\n';
      std::cout << "hangs-together " << (hangs_together(d) ? "yes" : "no") << '\n';
      std::cout << "projected-type " << to_string(fg.type) << '\n';
      std::cout << "rotations " << (fg.has_rotations ? "yes" : "no") << '\n';
      std::cout << "perpendicular-axes " << (fg.perpendicular_axes ? "yes" : "no") << '\n';
      if (is_twill(d)) std::cout << "twill " << twill_name(d) << '\n';
      return 0;
    }
    if (transform->parsed()) {
      const Design d = read_design(file);
      if (mode == "double") {
        std::cout << serialize(doubled(d));
        return 0;
      }
      const QuadrantNumbering q{anchor_x, anchor_y};
      for (int k = 1; k <= 4; ++k) {
        if (factor != 0 && k != factor) continue;
        if (factor == 0) std::cout << "# factor " << k << '\n';
        std::cout << serialize(halved(d, q, k));
      }
      return 0;
    }
    if (cat->parsed()) {
      if (order <= 4) throw UsageError("orders of 4 or less are out of scope");
      CatalogOptions o;
      o.policy = policy_or_throw(policy_text);
      o.cap = cap;
      const Catalog c = falls_apart_only ? falls_apart_list(order, o) : catalog(order, o);
      std::cout << summary_tsv(c);
      for (const auto& f : c.families) {
        if (f.error) std::cerr << to_string(f.params) << ": " << *f.error << '\n';
      }
      for (const auto& d : c.diagnostics) std::cerr << d << '\n';
      if (!out_dir.empty()) write_catalog(c, out_dir);
      return c.any_cap_exceeded() ? kCapExceeded : 0;
    }
    if (render->parsed()) {
      const Design d = read_design(file);
      std::optional<GroupSpec> group;
      if (!group_text.empty()) group = group_or_throw(group_text);
      RenderSpec rs;
      rs.cell_px = cell_px;
      for (const auto& o : overlays) {
        if (o == "mirrors") rs.mirrors = true;
        if (o == "glides") rs.glide_axes = true;
        if (o == "g1") rs.g1_unit = true;
        if (o == "h1") rs.h1_unit = true;
      }
      if (!overlays.empty() && !group) throw UsageError("--overlays needs --group");
      std::ofstream(output) << render_svg(d, group, rs);
      return 0;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return 0;
}
