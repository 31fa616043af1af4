#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isonemal/design.hpp"
#include "isonemal/isometry.hpp"

namespace isonemal {

/// Species of isonemal prefabric with parallel symmetry axes only. The
/// subscript m marks glide axes in mirror position; e/o give the parity of a
/// lattice dimension.
enum class SpeciesTag : std::uint8_t {
  s1_m, s1_e, s1_o,
  s2_m, s2_e, s2_o,
  s3,
  s4_e, s4_o,
  s5_e, s5_o,
  s6,
  s7_e, s7_o,
  s8_e, s8_o,
  s9,
  s10,
};

inline constexpr std::array<SpeciesTag, 18> all_species{
    SpeciesTag::s1_m, SpeciesTag::s1_e, SpeciesTag::s1_o, SpeciesTag::s2_m, SpeciesTag::s2_e,
    SpeciesTag::s2_o, SpeciesTag::s3,   SpeciesTag::s4_e, SpeciesTag::s4_o, SpeciesTag::s5_e,
    SpeciesTag::s5_o, SpeciesTag::s6,   SpeciesTag::s7_e, SpeciesTag::s7_o, SpeciesTag::s8_e,
    SpeciesTag::s8_o, SpeciesTag::s9,   SpeciesTag::s10};

std::string_view to_string(SpeciesTag t);
/// Accepts "1_m", "7_o", "10" and so on.
std::optional<SpeciesTag> parse_species(std::string_view s);
/// The species number, 1 to 10.
int species_number(SpeciesTag t);

/// Lattice-unit length and width, in cell diagonals.
struct SpeciesParams {
  SpeciesTag tag = SpeciesTag::s1_m;
  int ell = 1;
  int w = 1;

  friend bool operator==(const SpeciesParams&, const SpeciesParams&) = default;
  friend auto operator<=>(const SpeciesParams&, const SpeciesParams&) = default;
};

/// "1_m(2,3)".
std::string to_string(const SpeciesParams& p);

struct RuleViolation {
  std::string rule;
  std::string detail;
};

struct ParamVerdict {
  std::vector<RuleViolation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(std::string_view rule) const;
};

namespace rules {
inline constexpr std::string_view positive = "positive-dimensions";
inline constexpr std::string_view axis_parity = "axis-position-parity";
inline constexpr std::string_view subtype = "subtype-signature";
inline constexpr std::string_view isonemal = "strand-transitivity";
inline constexpr std::string_view minimum = "minimum-dimensions";
inline constexpr std::string_view excluded = "excluded-pair";
}  // namespace rules

/// Every rule the parameters break; empty when they are valid.
ParamVerdict validate_params(SpeciesTag tag, int ell, int w);
inline ParamVerdict validate_params(const SpeciesParams& p) {
  return validate_params(p.tag, p.ell, p.w);
}

/// A group of the tag's shape can be built: axis position and subtype
/// parities agree with (ell, w).
bool structurally_feasible(SpeciesTag tag, int ell, int w);
/// The coprimality condition for the group to be transitive on strands.
bool isonemality_condition(SpeciesTag tag, int ell, int w);

enum class UnitShape : std::uint8_t { rectangular, rhombic };

/// A fundamental parallelogram. `side_a` and `side_b` are translation vectors
/// in cells; `anchor` is a corner in half-cell units.
struct LatticeUnit {
  UnitShape shape = UnitShape::rectangular;
  int length = 0;  // along the axes, in cell diagonals
  int width = 0;   // across the axes, in cell diagonals
  QCoord anchor{};
  Cell side_a{};
  Cell side_b{};
};

struct GroupSpec {
  SpeciesParams params;
  std::vector<SymmetryOp> generators;
  LatticeUnit g1_unit;
  LatticeUnit h1_unit;
  int order = 0;
  int period_area = 0;
  Genus genus_expected = Genus::other;
};

/// The canonical generators for any parameters whose parities allow the
/// construction, valid or not. Throws std::invalid_argument when
/// structurally_feasible is false.
std::vector<SymmetryOp> build_generators(const SpeciesParams& p);

/// Throws std::invalid_argument listing the violated rules.
GroupSpec group_for(const SpeciesParams& p);

int formula_order(SpeciesTag tag, int ell, int w);
int formula_period(SpeciesTag tag, int ell, int w);
Genus formula_genus(SpeciesTag tag);

/// Translations of a group generated by grid ops, with their side flags.
/// Vectors are in cells.
class TranslationLattice {
 public:
  explicit TranslationLattice(const std::vector<SymmetryOp>& generators);

  /// Whether translation by (dx, dy) cells with the given side is in the group.
  bool contains(int dx, int dy, bool tau) const;
  /// Some translation of the group is its own tau-twin, so no design fits.
  bool contradictory() const;
  /// Area in cells of a fundamental domain of the side-preserving translations.
  long period_area() const;
  /// Smallest p with both (p, 0) and (0, p) side-preserving translations.
  int order() const;
  Genus genus() const;

 private:
  // Upper triangular basis of the lattice in Z^3, third coordinate the side.
  std::array<std::array<long, 3>, 3> rows_{};
};

/// Candidate families whose order is exactly N. Throws std::out_of_range for
/// N <= 4.
std::vector<SpeciesParams> candidates_for_order(int N);

/// Run lengths of a strand's over-and-under sequence, e.g. "1/1/2/3".
/// Throws std::invalid_argument when no view of d is a twill.
std::string twill_name(const Design& d);
bool is_twill(const Design& d);

/// The strand sequence of order length, read as a binary number with dark = 1,
/// minimised over strands, starting points and reading directions.
unsigned long long binary_index(const Design& d);

}  // namespace isonemal
