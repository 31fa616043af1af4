#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isonemal/design.hpp"
#include "isonemal/isometry.hpp"

namespace isonemal {

/// Over-relation between the strands of one period: nodes 0..n-1 are warps,
/// n..2n-1 are wefts, and an edge s -> t means s passes over t somewhere.
class StrandGraph {
 public:
  explicit StrandGraph(const Design& d);

  int strands() const { return 2 * n_; }
  bool over(int s, int t) const;
  /// Every strand reaches every other along over-edges.
  bool strongly_connected() const;

 private:
  int n_;
  std::vector<std::uint8_t> cells_;
};

/// True iff no nonempty proper set of strands lies wholly above the rest.
bool hangs_together(const Design& d);

/// The symmetry group is transitive on warps and wefts together.
bool is_isonemal(const Design& d);

enum class ProjectedType : std::uint8_t { p1, pg, pm, cm, other };
std::string_view to_string(ProjectedType t);

struct FullGroup {
  /// Side of the box the shifts were reduced in (the design's order).
  int box = 0;
  /// Every symmetry, shifts reduced modulo the box.
  std::vector<SymmetryOp> ops;
  bool has_rotations = false;
  /// Reflections in two perpendicular directions.
  bool perpendicular_axes = false;
  ProjectedType type = ProjectedType::p1;
};

/// Exhaustive scan over all grid ops in the design's order box.
FullGroup full_symmetry_group(const Design& d);

/// Each strand replaced by two with the same behaviour.
Design doubled(const Design& d);

/// Cells grouped in 2x2 blocks whose lower-left cell is congruent to
/// (ax, ay) mod 2, numbered like the quadrants of the plane.
struct QuadrantNumbering {
  int ax = 0;
  int ay = 0;

  /// 1 upper right, 2 upper left, 3 lower left, 4 lower right.
  int number(Cell c) const;
};

/// Keeps the crossings numbered k (1 to 4) and closes up the gaps.
/// An odd-sized design is tiled to twice its size first.
Design halved(const Design& d, QuadrantNumbering numbering, int k);

enum class NumberEffect : std::uint8_t { preserves, interchanges };

struct NumberingAction {
  /// Whether the axis runs through odd-numbered (1, 3) cells.
  bool axis_odd = true;
  NumberEffect odd_cells = NumberEffect::preserves;
  NumberEffect even_cells = NumberEffect::preserves;
  /// Set for a reflection whose unit length is odd: composed with the
  /// translation along the axis by that length, the numbering of the cells of
  /// opposite parity is preserved.
  bool preserved_with_axis_translation = false;
};

/// Effect of a diagonal reflection or glide-reflection in mirror position on
/// the numbering. The identity preserves everything. `unit_length` is the
/// length of the lattice unit in cell diagonals, used for reflections only.
/// Throws std::invalid_argument for other ops.
NumberingAction numbering_action(const SymmetryOp& a, QuadrantNumbering numbering,
                                 std::optional<int> unit_length = std::nullopt);

}  // namespace isonemal
