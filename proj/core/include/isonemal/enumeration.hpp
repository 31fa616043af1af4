#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isonemal/design.hpp"
#include "isonemal/isometry.hpp"
#include "isonemal/species.hpp"

namespace isonemal {

/// A finite group of grid ops, computed modulo translations by the box side.
class OpGroup {
 public:
  /// Closure of the generators together with the translations by `box` cells.
  OpGroup(const std::vector<SymmetryOp>& generators, int box);

  int box() const { return box_; }
  bool contains(const SymmetryOp& a) const;
  /// Elements with shifts reduced into [0, 2 box).
  const std::vector<SymmetryOp>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  /// Whether a g a^-1 lies in the group for every element g.
  bool normalized_by(const SymmetryOp& a) const;

  /// Dense index of an op with even shifts, in [0, 16 box^2).
  std::size_t index(const SymmetryOp& a) const;
  SymmetryOp op_at(std::size_t index) const;

 private:
  int box_;
  std::vector<SymmetryOp> generators_;
  std::vector<SymmetryOp> elements_;
  std::vector<std::uint8_t> member_;
};

/// The colouring freedom left by a group on an n-by-n box: cells fall into
/// orbits, and within an orbit every colour is fixed by the colour of the
/// representative up to the recorded sign.
struct OrbitSystem {
  int box = 0;
  /// Per cell, indexed y * box + x.
  std::vector<int> orbit_of;
  std::vector<std::uint8_t> complemented;
  /// Per orbit: the cell index of its representative, the first cell of the
  /// orbit in file order (top row first, left to right).
  std::vector<int> representative;
  std::vector<int> orbit_size;
  int free_count = 0;
  /// Some op of the group would have to complement a cell it fixes.
  bool contradictory = false;

  /// Bit i of `coloring` is the colour of the representative of orbit i.
  Design design_for(std::uint64_t coloring) const;
  /// Inverse of design_for for designs that have the group's symmetry.
  std::uint64_t coloring_of(const Design& d) const;
};

OrbitSystem orbits(const std::vector<SymmetryOp>& generators, int box);
OrbitSystem orbits(const GroupSpec& spec);

/// Which designs count as the same fabric. Translations are always
/// identified. Views identify the eight ways of looking at a fabric; since the
/// reverse is seen as the complement, views imply complement identification.
/// Mirror identifies left- and right-handed versions of a design.
struct EquivalencePolicy {
  bool use_translations = true;
  bool use_views = true;
  bool use_complement = false;
  bool use_mirror = false;

  friend bool operator==(const EquivalencePolicy&, const EquivalencePolicy&) = default;
};

/// "views", "views+mirror", "translations+complement" and so on.
std::string to_string(const EquivalencePolicy& p);
std::optional<EquivalencePolicy> parse_policy(std::string_view s);

/// The op that realises a view on an n-by-n box.
SymmetryOp view_op(ViewId v, int n);

/// Ops identified by the policy: translations with the view rotations and
/// side changes the policy allows.
std::vector<SymmetryOp> policy_ops(const EquivalencePolicy& p, int n);

/// Lexicographically least file serialization over the policy's transforms of
/// the design's order box.
std::string canonical_key(const Design& d, const EquivalencePolicy& p);

struct CatalogEntry {
  Design design{1};
  SpeciesParams species;
  int order = 0;
  Genus genus = Genus::other;
  bool isonemal = false;
  bool hangs = false;
  std::optional<std::string> twill;
  std::string key;
  /// Colouring of the orbit system that produced the design.
  std::uint64_t coloring = 0;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int free_count, std::uint64_t cap);
  int free_count() const { return free_count_; }

 private:
  int free_count_;
};

struct EnumerationOptions {
  EquivalencePolicy policy{};
  bool include_falling_apart = false;
  /// Largest number of colourings that may be scanned.
  std::uint64_t cap = std::uint64_t{1} << 24;
  /// Run the isonemal, genus and twill analyses on each member.
  bool analyze = true;
  bool compute_keys = false;
};

struct FamilyStats {
  int free_count = 0;
  bool contradictory = false;
  std::uint64_t colorings = 0;
  /// Colourings with symmetry beyond the intended group.
  std::uint64_t extra_symmetric = 0;
  /// Colourings identified with an earlier one under the policy.
  std::uint64_t duplicates = 0;
  std::uint64_t falls_apart = 0;
  std::uint64_t emitted = 0;
};

/// Streams the family's designs in increasing colouring order. Each design
/// has exactly the intended symmetry group, its order equals the family's,
/// and it is the first of its class under the policy.
FamilyStats for_each_member(const GroupSpec& spec, const EnumerationOptions& options,
                            const std::function<void(const CatalogEntry&)>& visit);

struct FamilyResult {
  GroupSpec spec;
  FamilyStats stats;
  std::vector<CatalogEntry> entries;
};

FamilyResult enumerate_family(const GroupSpec& spec, const EnumerationOptions& options = {});

FamilyResult enumerate_family(const GroupSpec& spec, const EquivalencePolicy& policy,
                              bool include_falling_apart);

}  // namespace isonemal
