#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "isonemal/analysis.hpp"
#include "isonemal/catalog.hpp"
#include "isonemal/enumeration.hpp"

namespace {

using namespace isonemal;
using T = SpeciesTag;

std::vector<SpeciesParams> small_families() {
  return {{T::s1_m, 2, 3}, {T::s3, 2, 3},   {T::s5_e, 2, 3}, {T::s5_e, 3, 2}, {T::s6, 1, 4},
          {T::s6, 3, 2},   {T::s7_o, 1, 3}, {T::s8_e, 2, 4}, {T::s8_e, 4, 2}, {T::s8_o, 7, 1},
          {T::s9, 2, 4},   {T::s9, 4, 2},   {T::s10, 7, 1}};
}

TEST(Orbits, PartitionTheBox) {
  for (const auto& p : small_families()) {
    const GroupSpec g = group_for(p);
    const OrbitSystem sys = orbits(g);
    EXPECT_FALSE(sys.contradictory);
    EXPECT_EQ(std::accumulate(sys.orbit_size.begin(), sys.orbit_size.end(), 0), g.order * g.order);
    EXPECT_EQ(static_cast<int>(sys.representative.size()), sys.free_count);
  }
}

TEST(Orbits, ColouringRoundTrip) {
  const OrbitSystem sys = orbits(group_for({T::s5_e, 2, 3}));
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << sys.free_count); ++x) {
    ASSERT_EQ(sys.coloring_of(sys.design_for(x)), x);
  }
}

TEST(Orbits, DesignsHaveTheGroup) {
  const GroupSpec g = group_for({T::s3, 2, 3});
  const OrbitSystem sys = orbits(g);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << sys.free_count); ++x) {
    const Design d = sys.design_for(x);
    for (const auto& op : g.generators) ASSERT_TRUE(is_symmetry_of(op, d));
  }
}

TEST(OpGroup, ClosureAndMembership) {
  const GroupSpec g = group_for({T::s1_m, 2, 3});
  const OpGroup group(g.generators, g.order);
  for (const auto& a : group.elements()) {
    EXPECT_TRUE(group.contains(invert(a)));
    for (const auto& b : group.elements()) ASSERT_TRUE(group.contains(compose(a, b)));
  }
  EXPECT_TRUE(group.contains(cell_translation(g.order, 0)));
  for (const auto& a : g.generators) EXPECT_TRUE(group.normalized_by(a));
}

// Every emitted design has exactly the family's group: nothing more, nothing less.
TEST(Enumerate, NoExtraSymmetry) {
  for (const auto& p : small_families()) {
    const GroupSpec g = group_for(p);
    const OpGroup group(g.generators, g.order);
    EnumerationOptions o;
    o.include_falling_apart = true;
    for (const auto& e : enumerate_family(g, o).entries) {
      const FullGroup full = full_symmetry_group(e.design);
      ASSERT_EQ(full.box, g.order) << to_string(p);
      EXPECT_EQ(full.ops.size(), group.size()) << to_string(p);
      for (const auto& a : full.ops) EXPECT_TRUE(group.contains(a)) << to_string(p);
      EXPECT_FALSE(full.has_rotations);
      EXPECT_FALSE(full.perpendicular_axes);
      EXPECT_TRUE(e.isonemal);
      EXPECT_EQ(e.order, g.order);
    }
  }
}

TEST(Enumerate, KnownCounts) {
  EXPECT_EQ(enumerate_family(group_for({T::s1_m, 2, 3})).entries.size(), 2U);
  EXPECT_EQ(enumerate_family(group_for({T::s7_o, 1, 3})).entries.size(), 1U);
  EXPECT_EQ(enumerate_family(group_for({T::s8_e, 2, 4})).entries.size(), 1U);
  EXPECT_EQ(enumerate_family(group_for({T::s9, 4, 2})).entries.size(), 1U);
}

TEST(Enumerate, SpeciesThreeRejectsPerpendicularMirrors) {
  // Some colourings of the species-3 system pick up mirrors across the glide axes.
  const GroupSpec g = group_for({T::s3, 2, 3});
  const OrbitSystem sys = orbits(g);
  int perpendicular = 0;
  std::set<std::uint64_t> emitted;
  EnumerationOptions o;
  o.include_falling_apart = true;
  o.policy = {true, false, false, false};
  for (const auto& e : enumerate_family(g, o).entries) emitted.insert(e.coloring);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << sys.free_count); ++x) {
    const Design d = sys.design_for(x);
    if (order_of(d) == g.order && full_symmetry_group(d).perpendicular_axes) {
      ++perpendicular;
      EXPECT_FALSE(emitted.count(x));
    }
  }
  EXPECT_GT(perpendicular, 0);
}

TEST(Enumerate, FallingApartOnlyOnRequest) {
  const GroupSpec g = group_for({T::s3, 2, 3});
  EnumerationOptions o;
  const auto without = enumerate_family(g, o);
  o.include_falling_apart = true;
  const auto with = enumerate_family(g, o);
  EXPECT_EQ(with.entries.size(), without.entries.size() + without.stats.falls_apart);
  for (const auto& e : without.entries) EXPECT_TRUE(e.hangs);
}

TEST(Enumerate, CapIsEnforced) {
  EnumerationOptions o;
  o.cap = 8;
  EXPECT_THROW(enumerate_family(group_for({T::s1_m, 2, 3}), o), CapExceeded);
}

TEST(Policy, ParseAndPrint) {
  for (const char* s : {"views", "views+mirror", "views+complement", "translations",
                        "translations+complement", "translations+complement+mirror"}) {
    const auto p = parse_policy(s);
    ASSERT_TRUE(p) << s;
    EXPECT_EQ(to_string(*p), s);
  }
  EXPECT_FALSE(parse_policy("rotations"));
  EXPECT_EQ(to_string(EquivalencePolicy{}), "views");
}

TEST(Policy, CoarserPolicyNeverCountsMore) {
  for (const auto& p : small_families()) {
    const GroupSpec g = group_for(p);
    std::size_t last = SIZE_MAX;
    for (const char* s : {"translations", "translations+complement", "views", "views+mirror"}) {
      EnumerationOptions o;
      o.policy = *parse_policy(s);
      const std::size_t n = enumerate_family(g, o).entries.size();
      EXPECT_LE(n, last) << to_string(p) << " " << s;
      last = n;
    }
  }
}

TEST(CanonicalKey, InvariantUnderPolicyOps) {
  const EquivalencePolicy views{};
  const auto r = enumerate_family(group_for({T::s1_m, 2, 3}));
  ASSERT_EQ(r.entries.size(), 2U);
  const std::string k0 = canonical_key(r.entries[0].design, views);
  const std::string k1 = canonical_key(r.entries[1].design, views);
  EXPECT_NE(k0, k1);
  for (ViewId v : all_views()) {
    EXPECT_EQ(canonical_key(translate(view(r.entries[0].design, v), 3, 5), views), k0);
  }
}

TEST(CanonicalKey, DedupMatchesKeys) {
  // Keys of emitted members are pairwise distinct; keys of all colourings
  // collapse onto the emitted ones.
  const GroupSpec g = group_for({T::s5_e, 2, 3});
  const auto r = enumerate_family(g);
  std::set<std::string> keys;
  for (const auto& e : r.entries) keys.insert(canonical_key(e.design, {}));
  EXPECT_EQ(keys.size(), r.entries.size());
}

TEST(Views, OpsFormAnAction) {
  const int n = 6;
  for (ViewId a : all_views()) {
    for (ViewId b : all_views()) {
      EXPECT_EQ(normalized(compose(view_op(b, n), view_op(a, n)), n), view_op(compose(a, b), n));
    }
  }
}

}  // namespace
