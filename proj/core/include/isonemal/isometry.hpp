#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "isonemal/design.hpp"

namespace isonemal {

/// Point in half-cell units: a cell edge is 2 units long, cell corners have
/// both coordinates even and the centre of cell (x, y) is (2x + 1, 2y + 1).
/// The diagonal step (1, 1) is half a cell diagonal.
struct QCoord {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const QCoord&, const QCoord&) = default;
};

inline QCoord center_of(Cell c) { return {2 * c.x + 1, 2 * c.y + 1}; }

/// The eight orthogonal maps that send the square grid to itself.
/// rot90 is counter-clockwise; diag reflects in y = x, antidiag in y = -x.
enum class Linear : std::uint8_t {
  identity,
  rot90,
  rot180,
  rot270,
  flip_x,  // (x, y) -> (-x, y), reflection in a vertical line
  flip_y,  // (x, y) -> (x, -y), reflection in a horizontal line
  diag,
  antidiag,
};

inline constexpr std::array<Linear, 8> all_linear{
    Linear::identity, Linear::rot90,  Linear::rot180, Linear::rot270,
    Linear::flip_x,   Linear::flip_y, Linear::diag,   Linear::antidiag};

struct Matrix2 {
  int a, b, c, d;  // row major: (x, y) -> (a x + b y, c x + d y)
};

Matrix2 matrix_of(Linear l);
Linear linear_of(const Matrix2& m);
Linear compose(Linear a, Linear b);
Linear invert(Linear a);
/// Whether warps are carried onto wefts.
bool swaps_axes(Linear l);
bool is_reflection(Linear l);
QCoord apply(Linear l, QCoord p);

/// An isometry of the grid together with the side flag: tau means the two
/// faces of the fabric are exchanged as well.
struct SymmetryOp {
  Linear linear = Linear::identity;
  QCoord shift{};
  bool tau = false;

  friend bool operator==(const SymmetryOp&, const SymmetryOp&) = default;
  friend auto operator<=>(const SymmetryOp&, const SymmetryOp&) = default;
};

/// -1 when the op complements colours: exactly one of "swaps warp and weft
/// directions" and "tau" holds.
int color_sign(const SymmetryOp& a);
inline bool flips_color(const SymmetryOp& a) { return color_sign(a) < 0; }

SymmetryOp identity_op();
/// Translation by (dx, dy) half-cell units.
SymmetryOp translation(int dx, int dy, bool tau = false);
/// Translation by whole cells.
SymmetryOp cell_translation(int dx, int dy, bool tau = false);
/// Glide-reflection in the line y = x + c carrying (x, y) to a point moved by
/// t steps of (1, 1) along the axis. t = 0 gives the mirror.
SymmetryOp diagonal_glide(int c, int t, bool tau);

/// a after b.
SymmetryOp compose(const SymmetryOp& a, const SymmetryOp& b);
SymmetryOp invert(const SymmetryOp& a);
QCoord apply(const SymmetryOp& a, QCoord p);

/// Whether the op sends cell centres to cell centres.
bool maps_cells(const SymmetryOp& a);
/// Throws LatticeError when `a` does not map cells to cells.
Cell apply(const SymmetryOp& a, Cell c);
/// Shift reduced modulo the translations by n cells.
SymmetryOp normalized(const SymmetryOp& a, int n);

class LatticeError : public std::invalid_argument {
 public:
  LatticeError() : std::invalid_argument("op does not normalize period lattice") {}
};

/// True iff colour(a c) == colour(c) XOR flips_color(a) for every cell.
/// Throws LatticeError when `a` does not map cells to cells.
bool is_symmetry_of(const SymmetryOp& a, const Design& d);

/// The design carried by `a`: result(a c) = d(c) XOR flips_color(a).
Design transform(const Design& d, const SymmetryOp& a);

enum class OpKind : std::uint8_t { translation, tau_translation, mirror, glide, rotation };
enum class AxisSlope : std::uint8_t { none, plus_one, minus_one, zero, infinite };

/// Normal form of an op. Offsets and glides are in half-cell units:
/// slope +1 axis is y = x + offset, slope -1 axis is y = -x + offset,
/// slope 0 axis is y = offset, infinite slope axis is x = offset.
/// For diagonal axes `glide` counts (1, 1) steps, for the others half cells.
struct OpClass {
  OpKind kind = OpKind::translation;
  AxisSlope slope = AxisSlope::none;
  int offset = 0;
  int glide = 0;
  /// Set for diagonal axes: the axis runs through cell corners.
  std::optional<bool> mirror_position;
  /// Rotation centre and counter-clockwise quarter turns.
  std::optional<QCoord> center;
  int quarter_turns = 0;
  bool tau = false;

  friend bool operator==(const OpClass&, const OpClass&) = default;
};

/// Requires maps_cells(a); throws LatticeError otherwise.
OpClass classify(const SymmetryOp& a);

std::string_view to_string(OpKind k);
std::string to_string(const OpClass& c);
/// `<kind> axis=<slope,offset> glide=<k> side=<e|τ>`.
std::string to_string(const SymmetryOp& a);

}  // namespace isonemal
