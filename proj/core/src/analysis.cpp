#include "isonemal/analysis.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "isonemal/union_find.hpp"

namespace isonemal {

namespace {

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

// The design restricted to its order box.
Design reduced(const Design& d) {
  const int p = order_of(d);
  if (p == d.size()) return d;
  Design out(p);
  for (int y = 0; y < p; ++y) {
    for (int x = 0; x < p; ++x) out.set(x, y, d.dark(x, y));
  }
  return out;
}

bool preserves(const Design& d, const SymmetryOp& a) {
  const int n = d.size();
  const bool flip = flips_color(a);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (d.dark(apply(a, Cell{x, y})) != (d.dark(x, y) != flip)) return false;
    }
  }
  return true;
}

}  // namespace

StrandGraph::StrandGraph(const Design& d) : n_(d.size()), cells_(d.cells().begin(), d.cells().end()) {}

bool StrandGraph::over(int s, int t) const {
  if (s < n_ && t >= n_) return cells_[static_cast<std::size_t>((t - n_) * n_ + s)] != 0;
  if (s >= n_ && t < n_) return cells_[static_cast<std::size_t>((s - n_) * n_ + t)] == 0;
  return false;
}

bool StrandGraph::strongly_connected() const {
  const int total = strands();
  for (int direction = 0; direction < 2; ++direction) {
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      const int lo = s < n_ ? n_ : 0;
      for (int t = lo; t < lo + n_; ++t) {
        const bool edge = direction == 0 ? over(s, t) : over(t, s);
        if (edge && !seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = 1;
          ++count;
          stack.push_back(t);
        }
      }
    }
    if (count != total) return false;
  }
  return true;
}

bool hangs_together(const Design& d) { return StrandGraph(d).strongly_connected(); }

bool is_isonemal(const Design& input) {
  const Design d = reduced(input);
  const int p = d.size();
  // warps 0..p-1, wefts p..2p-1
  ParityUnionFind strands(static_cast<std::size_t>(2 * p));
  auto absorb = [&](const SymmetryOp& a) {
    const bool swap = swaps_axes(a.linear);
    for (int i = 0; i < p; ++i) {
      const Cell w = apply(a, Cell{i, 0});
      const Cell f = apply(a, Cell{0, i});
      strands.unite(static_cast<std::size_t>(i),
                    static_cast<std::size_t>(swap ? p + mod(w.y, p) : mod(w.x, p)), false);
      strands.unite(static_cast<std::size_t>(p + i),
                    static_cast<std::size_t>(swap ? mod(f.x, p) : p + mod(f.y, p)), false);
    }
  };
  // Searches ops of the given linear parts whose first or second shift
  // component is pinned; returns whether one is a symmetry.
  auto search = [&](std::initializer_list<std::pair<Linear, int>> pinned, bool pin_first) {
    for (const auto& [lin, fixed] : pinned) {
      for (int free = 0; free < 2 * p; free += 2) {
        for (bool tau : {false, true}) {
          const SymmetryOp a{lin, pin_first ? QCoord{fixed, free} : QCoord{free, fixed}, tau};
          if (preserves(d, a)) {
            absorb(a);
            return true;
          }
        }
      }
    }
    return false;
  };
  for (int x = 1; x < p; ++x) {
    if (strands.same(0, static_cast<std::size_t>(x))) continue;
    const bool found = search({{Linear::identity, 2 * x},
                               {Linear::flip_y, 2 * x},
                               {Linear::rot180, 2 * x + 2},
                               {Linear::flip_x, 2 * x + 2}},
                              true);
    if (!found) return false;
  }
  if (strands.same(0, static_cast<std::size_t>(p))) return true;
  return search({{Linear::diag, 0}, {Linear::rot90, 0}, {Linear::antidiag, 2}, {Linear::rot270, 2}},
                false);
}

std::string_view to_string(ProjectedType t) {
  switch (t) {
    case ProjectedType::p1: return "p1";
    case ProjectedType::pg: return "pg";
    case ProjectedType::pm: return "pm";
    case ProjectedType::cm: return "cm";
    case ProjectedType::other: return "other";
  }
  return "other";
}

FullGroup full_symmetry_group(const Design& input) {
  const Design d = reduced(input);
  const int p = d.size();
  FullGroup g;
  g.box = p;
  for (Linear lin : all_linear) {
    for (int s1 = 0; s1 < 2 * p; s1 += 2) {
      for (int s2 = 0; s2 < 2 * p; s2 += 2) {
        for (bool tau : {false, true}) {
          const SymmetryOp a{lin, {s1, s2}, tau};
          if (preserves(d, a)) g.ops.push_back(a);
        }
      }
    }
  }
  std::array<bool, 8> present{};
  for (const auto& a : g.ops) present[static_cast<std::size_t>(a.linear)] = true;
  auto has = [&](Linear l) { return present[static_cast<std::size_t>(l)]; };
  g.has_rotations = has(Linear::rot90) || has(Linear::rot180) || has(Linear::rot270);
  g.perpendicular_axes =
      (has(Linear::flip_x) && has(Linear::flip_y)) || (has(Linear::diag) && has(Linear::antidiag));
  std::vector<Linear> reflections;
  for (Linear l : {Linear::flip_x, Linear::flip_y, Linear::diag, Linear::antidiag}) {
    if (has(l)) reflections.push_back(l);
  }
  if (g.has_rotations || reflections.size() > 1) {
    g.type = ProjectedType::other;
    return g;
  }
  if (reflections.empty()) {
    g.type = ProjectedType::p1;
    return g;
  }
  const Linear r = reflections.front();
  QCoord u{1, 1};
  if (r == Linear::antidiag) u = {1, -1};
  if (r == Linear::flip_x) u = {0, 1};
  if (r == Linear::flip_y) u = {1, 0};
  auto dot = [&](QCoord s) { return s.x * u.x + s.y * u.y; };
  // Ops are listed modulo the box; each also stands for its box translates.
  std::vector<QCoord> box_shifts;
  for (int k = -1; k <= 1; ++k) {
    for (int j = -1; j <= 1; ++j) box_shifts.push_back({2 * p * k, 2 * p * j});
  }
  int step = 0;
  for (const auto& a : g.ops) {
    if (a.linear != Linear::identity) continue;
    for (const QCoord b : box_shifts) {
      const QCoord t{a.shift.x + b.x, a.shift.y + b.y};
      if (t.x * u.y == t.y * u.x) step = std::gcd(step, dot(t));
    }
  }
  bool mirror = false;
  bool glide = false;
  for (const auto& a : g.ops) {
    if (a.linear != r) continue;
    for (const QCoord b : box_shifts) {
      if (mod(dot({a.shift.x + b.x, a.shift.y + b.y}), step) == 0) {
        mirror = true;
      } else {
        glide = true;
      }
    }
  }
  g.type = mirror && glide ? ProjectedType::cm : (mirror ? ProjectedType::pm : ProjectedType::pg);
  return g;
}

Design doubled(const Design& d) {
  const int n = d.size();
  Design out(2 * n);
  for (int y = 0; y < 2 * n; ++y) {
    for (int x = 0; x < 2 * n; ++x) out.set(x, y, d.dark(x / 2, y / 2));
  }
  return out;
}

int QuadrantNumbering::number(Cell c) const {
  const int i = mod(c.x - ax, 2);
  const int j = mod(c.y - ay, 2);
  if (i == 1 && j == 1) return 1;
  if (i == 0 && j == 1) return 2;
  if (i == 0 && j == 0) return 3;
  return 4;
}

Design halved(const Design& input, QuadrantNumbering numbering, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("factor number must be 1 to 4");
  const Design d = input.size() % 2 == 0 ? input : tile(input, 2);
  static constexpr std::array<std::array<int, 2>, 4> offsets{{{1, 1}, {0, 1}, {0, 0}, {1, 0}}};
  const auto [i, j] = offsets[static_cast<std::size_t>(k - 1)];
  const int m = d.size() / 2;
  Design out(m);
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) {
      out.set(x, y, d.dark(numbering.ax + 2 * x + i, numbering.ay + 2 * y + j));
    }
  }
  return out;
}

NumberingAction numbering_action(const SymmetryOp& a, QuadrantNumbering numbering,
                                 std::optional<int> unit_length) {
  NumberingAction out;
  if (a.linear == Linear::identity && a.shift == QCoord{}) return out;
  if (a.linear != Linear::diag && a.linear != Linear::antidiag) {
    throw std::invalid_argument("numbering action needs a diagonal reflection or glide");
  }
  const OpClass c = classify(a);
  if (!c.mirror_position.value_or(false)) {
    throw std::invalid_argument("numbering action needs an axis in mirror position");
  }
  const int half = c.offset / 2;
  const int drift = a.linear == Linear::diag ? half + numbering.ax - numbering.ay
                                             : half - 1 - numbering.ax - numbering.ay;
  out.axis_odd = mod(drift, 2) == 0;
  const int m = c.glide / 2;  // glide in cell diagonals
  const NumberEffect same = mod(m, 2) == 1 ? NumberEffect::interchanges : NumberEffect::preserves;
  const NumberEffect opposite =
      mod(m, 2) == 1 ? NumberEffect::preserves : NumberEffect::interchanges;
  out.odd_cells = out.axis_odd ? same : opposite;
  out.even_cells = out.axis_odd ? opposite : same;
  out.preserved_with_axis_translation = m == 0 && unit_length && mod(*unit_length, 2) == 1;
  return out;
}

}  // namespace isonemal
