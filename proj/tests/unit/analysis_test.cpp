#include <gtest/gtest.h>

#include <random>
#include <set>

#include "isonemal/analysis.hpp"
#include "isonemal/enumeration.hpp"
#include "isonemal/species.hpp"

namespace {

using namespace isonemal;
using T = SpeciesTag;

Design plain() { return Design::from_rows({"10", "01"}); }

// Strand orbits from raw symmetry tests of every grid op in the box.
bool brute_isonemal(const Design& d) {
  const int n = d.size();
  std::vector<std::vector<int>> edges(static_cast<std::size_t>(2 * n));
  for (Linear l : all_linear) {
    for (int s1 = 0; s1 < 2 * n; s1 += 2) {
      for (int s2 = 0; s2 < 2 * n; s2 += 2) {
        for (bool tau : {false, true}) {
          const SymmetryOp a{l, {s1, s2}, tau};
          bool symmetric = true;
          for (int y = 0; y < n && symmetric; ++y) {
            for (int x = 0; x < n && symmetric; ++x) {
              const Cell c = apply(a, Cell{x, y});
              symmetric = d.dark(c) == (d.dark(x, y) != flips_color(a));
            }
          }
          if (!symmetric) continue;
          for (int s = 0; s < 2 * n; ++s) {
            const Cell p = apply(a, s < n ? Cell{s, 0} : Cell{0, s - n});
            const Cell q = apply(a, s < n ? Cell{s, 1} : Cell{1, s - n});
            const int t = p.x == q.x ? ((p.x % n) + n) % n : n + ((p.y % n) + n) % n;
            edges[static_cast<std::size_t>(s)].push_back(t);
          }
        }
      }
    }
  }
  std::vector<int> seen(static_cast<std::size_t>(2 * n), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int t : edges[static_cast<std::size_t>(queue[i])]) {
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = 1;
        queue.push_back(t);
      }
    }
  }
  return static_cast<int>(queue.size()) == 2 * n;
}

std::vector<Design> probe_designs() {
  std::vector<Design> out{plain(), Design::from_rows({"001", "010", "100"}),
                          Design::from_rows({"1100", "1100", "0011", "0011"}),
                          Design::from_rows({"10", "10"}), Design(4)};
  for (const SpeciesParams p : {SpeciesParams{T::s1_m, 2, 3}, SpeciesParams{T::s6, 1, 4},
                                SpeciesParams{T::s8_e, 2, 4}, SpeciesParams{T::s8_o, 7, 1},
                                SpeciesParams{T::s9, 4, 2}, SpeciesParams{T::s7_o, 1, 3}}) {
    EnumerationOptions o;
    o.include_falling_apart = true;
    for (const auto& e : enumerate_family(group_for(p), o).entries) out.push_back(e.design);
  }
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    Design d(n);
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) d.set(x, y, std::uniform_int_distribution<int>(0, 1)(rng) == 1);
    }
    out.push_back(d);
  }
  return out;
}

TEST(Isonemal, MatchesBruteForceOracle) {
  for (const Design& d : probe_designs()) {
    if (d.size() > 16) continue;
    const Design reduced = d.size() == order_of(d) ? d : [&] {
      const int p = order_of(d);
      Design r(p);
      for (int y = 0; y < p; ++y) {
        for (int x = 0; x < p; ++x) r.set(x, y, d.dark(x, y));
      }
      return r;
    }();
    EXPECT_EQ(is_isonemal(d), brute_isonemal(reduced)) << serialize(d);
    EXPECT_EQ(is_isonemal(d), is_isonemal(tile(d, 2)));
  }
}

TEST(Isonemal, Examples) {
  EXPECT_TRUE(is_isonemal(plain()));
  EXPECT_FALSE(is_isonemal(Design::from_rows({"10", "10"})));  // vertical stripes
  EXPECT_TRUE(is_isonemal(Design(3)));
}

TEST(Hangs, Examples) {
  EXPECT_FALSE(hangs_together(Design(3)));
  EXPECT_TRUE(hangs_together(plain()));
  EXPECT_TRUE(hangs_together(Design::from_rows({"001", "010", "100"})));
}

TEST(Hangs, InvariantUnderViewsAndComplement) {
  for (const Design& d : probe_designs()) {
    const bool h = hangs_together(d);
    EXPECT_EQ(hangs_together(complement(d)), h);
    for (ViewId v : all_views()) EXPECT_EQ(hangs_together(view(d, v)), h);
  }
}

TEST(Hangs, FallingApartSplitsIntoCheckerboardLayers) {
  EnumerationOptions o;
  o.include_falling_apart = true;
  for (const SpeciesParams p : {SpeciesParams{T::s3, 2, 3}, SpeciesParams{T::s6, 1, 6}}) {
    for (const auto& e : enumerate_family(group_for(p), o).entries) {
      if (e.hangs) continue;
      // Alternate rows carry every other cell fixed, alternating between rows.
      const Design& d = e.design;
      const int n = d.size();
      bool found = false;
      for (int ax = 0; ax < 2 && !found; ++ax) {
        for (int ay = 0; ay < 2 && !found; ++ay) {
          bool ok = true;
          for (int y = ay; y < n && ok; y += 2) {
            for (int x = ax; x < n && ok; x += 2) {
              ok = d.dark(x, y) && !d.dark(x + 1, y + 1);
            }
          }
          bool flipped = true;
          for (int y = ay; y < n && flipped; y += 2) {
            for (int x = ax; x < n && flipped; x += 2) {
              flipped = !d.dark(x, y) && d.dark(x + 1, y + 1);
            }
          }
          found = ok || flipped;
        }
      }
      EXPECT_TRUE(found) << serialize(d);
    }
  }
}

TEST(Doubling, PlainWeaveBecomesBlocks) {
  EXPECT_EQ(doubled(plain()), Design::from_rows({"1100", "1100", "0011", "0011"}));
  EXPECT_EQ(order_of(doubled(Design::from_rows({"001", "010", "100"}))), 6);
  EXPECT_TRUE(is_isonemal(doubled(plain())));  // the 2/2 basket
}

TEST(Halving, UndoesDoubling) {
  for (const Design& d : probe_designs()) {
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(halved(doubled(d), {}, k), d);
  }
}

TEST(Halving, PlainWeaveFactorsAreTrivial) {
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(is_trivial(halved(plain(), {}, k)));
  EXPECT_THROW(halved(plain(), {}, 5), std::invalid_argument);
}

TEST(Halving, OddSizeIsTiledFirst) {
  const Design twill = Design::from_rows({"001", "010", "100"});
  EXPECT_EQ(halved(twill, {}, 3).size(), 3);
}

TEST(Numbering, QuadrantsPartitionBlocks) {
  for (int ax = 0; ax < 2; ++ax) {
    for (int ay = 0; ay < 2; ++ay) {
      const QuadrantNumbering q{ax, ay};
      std::set<int> seen;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) seen.insert(q.number({ax + i, ay + j}));
      }
      EXPECT_EQ(seen, (std::set<int>{1, 2, 3, 4}));
      EXPECT_EQ(q.number({ax + 1, ay + 1}), 1);
      EXPECT_EQ(q.number({ax, ay}), 3);
      EXPECT_EQ(q.number({ax + 7, ay + 4}), q.number({ax + 1, ay}));
    }
  }
}

NumberEffect observed(const SymmetryOp& a, QuadrantNumbering q, bool odd, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-30, 30);
  int preserved = 0;
  int interchanged = 0;
  for (int i = 0; i < 200; ++i) {
    const Cell cell{c(rng), c(rng)};
    const int before = q.number(cell);
    if ((before % 2 == 1) != odd) continue;
    const int after = q.number(apply(a, cell));
    if (after == before) {
      ++preserved;
    } else if ((after + 2 - 1) % 4 + 1 == before) {
      ++interchanged;
    }
  }
  EXPECT_TRUE(preserved == 0 || interchanged == 0);
  EXPECT_GT(preserved + interchanged, 0);
  return interchanged > 0 ? NumberEffect::interchanges : NumberEffect::preserves;
}

TEST(Numbering, ActionMatchesDirectComputation) {
  std::mt19937 rng(29);
  for (int ax = 0; ax < 2; ++ax) {
    for (int ay = 0; ay < 2; ++ay) {
      const QuadrantNumbering q{ax, ay};
      for (int c = -6; c <= 6; c += 2) {
        for (int t = -6; t <= 6; t += 2) {
          for (Linear l : {Linear::diag, Linear::antidiag}) {
            const SymmetryOp a = l == Linear::diag ? diagonal_glide(c, t, true)
                                                   : SymmetryOp{Linear::antidiag, {c + t, c - t}, true};
            const NumberingAction act = numbering_action(a, q);
            EXPECT_EQ(act.odd_cells, observed(a, q, true, rng)) << c << " " << t;
            EXPECT_EQ(act.even_cells, observed(a, q, false, rng)) << c << " " << t;
          }
        }
      }
    }
  }
}

TEST(Numbering, AxisTranslationRestoresOddMirrors) {
  const QuadrantNumbering q{};
  const int unit = 3;
  const SymmetryOp mirror = diagonal_glide(0, 0, true);
  const NumberingAction act = numbering_action(mirror, q, unit);
  EXPECT_TRUE(act.preserved_with_axis_translation);
  const SymmetryOp composite = compose(cell_translation(unit, unit), mirror);
  std::mt19937 rng(31);
  const NumberEffect odd = act.axis_odd ? NumberEffect::interchanges : NumberEffect::preserves;
  EXPECT_EQ(observed(composite, q, !act.axis_odd, rng), NumberEffect::preserves);
  (void)odd;
}

TEST(Numbering, RejectsOtherOps) {
  EXPECT_THROW(numbering_action({Linear::rot90, {0, 0}, false}, {}), std::invalid_argument);
  EXPECT_THROW(numbering_action(diagonal_glide(1, 1, true), {}), std::invalid_argument);
  const NumberingAction id = numbering_action(identity_op(), {});
  EXPECT_EQ(id.odd_cells, NumberEffect::preserves);
  EXPECT_EQ(id.even_cells, NumberEffect::preserves);
}

TEST(FullGroup, ProjectedTypes) {
  const auto g1 = enumerate_family(group_for({T::s1_m, 2, 3}));
  EXPECT_EQ(full_symmetry_group(g1.entries[0].design).type, ProjectedType::pg);
  const auto g6 = enumerate_family(group_for({T::s6, 1, 4}));
  EXPECT_EQ(full_symmetry_group(g6.entries[0].design).type, ProjectedType::pm);
  const auto g8 = enumerate_family(group_for({T::s8_e, 2, 4}));
  EXPECT_EQ(full_symmetry_group(g8.entries[0].design).type, ProjectedType::cm);
  const FullGroup p = full_symmetry_group(plain());
  EXPECT_TRUE(p.has_rotations);
  EXPECT_EQ(p.type, ProjectedType::other);
  bool quarter_tau = false;
  for (const auto& a : p.ops) quarter_tau = quarter_tau || (a.linear == Linear::rot90 && a.tau);
  EXPECT_TRUE(quarter_tau);
}

TEST(FullGroup, MirrorPositionIsUniformForGlideGroups) {
  for (const SpeciesParams p : {SpeciesParams{T::s1_m, 2, 3}, SpeciesParams{T::s3, 2, 3}}) {
    for (const auto& e : enumerate_family(group_for(p)).entries) {
      const FullGroup g = full_symmetry_group(e.design);
      ASSERT_EQ(g.type, ProjectedType::pg);
      std::set<bool> positions;
      for (const auto& a : g.ops) {
        if (a.linear == Linear::diag || a.linear == Linear::antidiag) {
          positions.insert(classify(a).mirror_position.value());
        }
      }
      EXPECT_EQ(positions.size(), 1U);
    }
  }
}

}  // namespace
