#include "isonemal/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <unordered_set>

#include <fmt/format.h>

#include "isonemal/analysis.hpp"
#include "isonemal/union_find.hpp"

namespace isonemal {

namespace {

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

std::size_t cell_index(Cell c, int n) {
  return static_cast<std::size_t>(mod(c.y, n)) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(mod(c.x, n));
}

Cell cell_at(std::size_t i, int n) {
  return {static_cast<int>(i % static_cast<std::size_t>(n)),
          static_cast<int>(i / static_cast<std::size_t>(n))};
}

}  // namespace

OpGroup::OpGroup(const std::vector<SymmetryOp>& generators, int box) : box_(box) {
  if (box < 1) throw std::invalid_argument("box side must be positive");
  for (const auto& g : generators) {
    if (!maps_cells(g)) throw LatticeError();
    generators_.push_back(normalized(g, box));
  }
  member_.assign(16 * static_cast<std::size_t>(box) * static_cast<std::size_t>(box), 0);
  const SymmetryOp id = identity_op();
  member_[index(id)] = 1;
  elements_.push_back(id);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const auto& g : generators_) {
      const SymmetryOp next = normalized(compose(elements_[i], g), box_);
      const std::size_t k = index(next);
      if (!member_[k]) {
        member_[k] = 1;
        elements_.push_back(next);
      }
    }
  }
}

std::size_t OpGroup::index(const SymmetryOp& a) const {
  const auto n = static_cast<std::size_t>(box_);
  const auto sx = static_cast<std::size_t>(mod(a.shift.x / 2, box_));
  const auto sy = static_cast<std::size_t>(mod(a.shift.y / 2, box_));
  return ((static_cast<std::size_t>(a.linear) * n + sx) * n + sy) * 2 + (a.tau ? 1 : 0);
}

SymmetryOp OpGroup::op_at(std::size_t index) const {
  const auto n = static_cast<std::size_t>(box_);
  const bool tau = (index & 1) != 0;
  index >>= 1;
  const int sy = static_cast<int>(index % n);
  index /= n;
  const int sx = static_cast<int>(index % n);
  index /= n;
  return {static_cast<Linear>(index), {2 * sx, 2 * sy}, tau};
}

bool OpGroup::contains(const SymmetryOp& a) const {
  return maps_cells(a) && member_[index(a)] != 0;
}

bool OpGroup::normalized_by(const SymmetryOp& a) const {
  const SymmetryOp inv = invert(a);
  return std::all_of(generators_.begin(), generators_.end(), [&](const SymmetryOp& g) {
    return contains(compose(compose(a, g), inv));
  });
}

Design OrbitSystem::design_for(std::uint64_t coloring) const {
  std::vector<std::uint8_t> cells(orbit_of.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool bit = ((coloring >> orbit_of[i]) & 1U) != 0;
    cells[i] = (bit != (complemented[i] != 0)) ? 1 : 0;
  }
  return Design(box, std::move(cells));
}

std::uint64_t OrbitSystem::coloring_of(const Design& d) const {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < representative.size(); ++i) {
    const Cell c = cell_at(static_cast<std::size_t>(representative[i]), box);
    if (d.dark(c)) x |= std::uint64_t{1} << i;
  }
  return x;
}

OrbitSystem orbits(const std::vector<SymmetryOp>& generators, int box) {
  OrbitSystem sys;
  sys.box = box;
  const auto cells = static_cast<std::size_t>(box) * static_cast<std::size_t>(box);
  ParityUnionFind uf(cells);
  for (const auto& g : generators) {
    if (!maps_cells(g)) throw LatticeError();
    const bool flip = flips_color(g);
    for (std::size_t i = 0; i < cells; ++i) {
      const std::size_t j = cell_index(apply(g, cell_at(i, box)), box);
      if (!uf.unite(i, j, flip)) sys.contradictory = true;
    }
  }
  sys.orbit_of.assign(cells, -1);
  sys.complemented.assign(cells, 0);
  std::vector<int> orbit_of_root(cells, -1);
  std::vector<std::uint8_t> rep_parity;
  for (int y = box - 1; y >= 0; --y) {
    for (int x = 0; x < box; ++x) {
      const std::size_t i = cell_index({x, y}, box);
      const auto [root, parity] = uf.find(i);
      int& id = orbit_of_root[root];
      if (id < 0) {
        id = static_cast<int>(sys.representative.size());
        sys.representative.push_back(static_cast<int>(i));
        sys.orbit_size.push_back(0);
        rep_parity.push_back(parity ? 1 : 0);
      }
      sys.orbit_of[i] = id;
      sys.complemented[i] = (parity != (rep_parity[static_cast<std::size_t>(id)] != 0)) ? 1 : 0;
      ++sys.orbit_size[static_cast<std::size_t>(id)];
    }
  }
  sys.free_count = static_cast<int>(sys.representative.size());
  return sys;
}

OrbitSystem orbits(const GroupSpec& spec) { return orbits(spec.generators, spec.order); }

std::string to_string(const EquivalencePolicy& p) {
  std::string out = p.use_views ? "views" : "translations";
  if (p.use_complement) out += "+complement";
  if (p.use_mirror) out += "+mirror";
  return out;
}

std::optional<EquivalencePolicy> parse_policy(std::string_view s) {
  for (bool views : {true, false}) {
    for (bool comp : {false, true}) {
      for (bool mirror : {true, false}) {
        const EquivalencePolicy p{true, views, comp, mirror};
        if (to_string(p) == s) return p;
      }
    }
  }
  return std::nullopt;
}

SymmetryOp view_op(ViewId v, int n) {
  const SymmetryOp quarter{Linear::rot90, {2 * n, 0}, false};
  SymmetryOp op = identity_op();
  for (int t = 0; t < static_cast<int>(v.compass); ++t) op = compose(quarter, op);
  if (v.side == Side::reverse) op.tau = !op.tau;
  return normalized(op, n);
}

std::vector<SymmetryOp> policy_ops(const EquivalencePolicy& p, int n) {
  std::vector<Linear> linears{Linear::identity};
  if (p.use_views) linears = {Linear::identity, Linear::rot90, Linear::rot180, Linear::rot270};
  if (p.use_mirror) {
    if (p.use_views) {
      linears.insert(linears.end(), {Linear::flip_x, Linear::flip_y, Linear::diag, Linear::antidiag});
    } else {
      linears.push_back(Linear::flip_x);
    }
  }
  std::vector<bool> sides{false};
  if (p.use_views || p.use_complement) sides = {false, true};
  const int shifts = p.use_translations ? n : 1;
  std::vector<SymmetryOp> out;
  for (Linear l : linears) {
    for (bool tau : sides) {
      for (int a = 0; a < shifts; ++a) {
        for (int b = 0; b < shifts; ++b) out.push_back({l, {2 * a, 2 * b}, tau});
      }
    }
  }
  return out;
}

std::string canonical_key(const Design& input, const EquivalencePolicy& p) {
  const int n = order_of(input);
  Design d(n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) d.set(x, y, input.dark(x, y));
  }
  // Cells in file order.
  std::vector<Cell> order;
  order.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int y = n - 1; y >= 0; --y) {
    for (int x = 0; x < n; ++x) order.push_back({x, y});
  }
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cur(order.size());
  for (const SymmetryOp& t : policy_ops(p, n)) {
    const SymmetryOp inv = invert(t);
    const bool flip = flips_color(t);
    bool less = best.empty();
    bool decided = less;
    std::size_t i = 0;
    for (; i < order.size(); ++i) {
      const std::uint8_t v = (d.dark(apply(inv, order[i])) != flip) ? 1 : 0;
      cur[i] = v;
      if (!decided && v != best[i]) {
        decided = true;
        less = v < best[i];
        if (!less) break;
      }
    }
    if (less) best = cur;
  }
  Design out(n);
  for (std::size_t i = 0; i < order.size(); ++i) out.set(order[i].x, order[i].y, best[i] != 0);
  return serialize(out);
}

CapExceeded::CapExceeded(int free_count, std::uint64_t cap)
    : std::runtime_error(fmt::format("2^{} colourings exceed the cap of {}", free_count, cap)),
      free_count_(free_count) {}

namespace {

// A signed permutation of orbit bits, applied bytewise.
class BitAction {
 public:
  BitAction(const std::vector<int>& perm, std::uint64_t mask) : mask_(mask) {
    const std::size_t bytes = (perm.size() + 7) / 8;
    tables_.assign(bytes, std::array<std::uint64_t, 256>{});
    for (std::size_t j = 0; j < bytes; ++j) {
      for (unsigned v = 0; v < 256; ++v) {
        std::uint64_t out = 0;
        for (unsigned b = 0; b < 8; ++b) {
          const std::size_t bit = 8 * j + b;
          if (bit < perm.size() && ((v >> b) & 1U)) out |= std::uint64_t{1} << perm[bit];
        }
        tables_[j][v] = out;
      }
    }
  }

  std::uint64_t operator()(std::uint64_t x) const {
    x ^= mask_;
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < tables_.size(); ++j) out |= tables_[j][(x >> (8 * j)) & 0xFFU];
    return out;
  }

 private:
  std::uint64_t mask_;
  std::vector<std::array<std::uint64_t, 256>> tables_;
};

class Bitmap {
 public:
  explicit Bitmap(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint64_t i) const { return ((words_[i >> 6] >> (i & 63)) & 1U) != 0; }
  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Marks every colouring that is also symmetric under some op outside the
// group. For each coset hG the colourings fixed by h form an affine subspace
// of the colouring space, solved by a parity union-find over orbit bits.
void mark_extra_symmetric(const OpGroup& group, const OrbitSystem& sys, Bitmap& marked) {
  const int n = group.box();
  const std::size_t cells = sys.orbit_of.size();
  const std::size_t total_ops = 16 * static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<std::uint8_t> visited(total_ops, 0);
  for (const auto& g : group.elements()) visited[group.index(g)] = 1;
  std::unordered_set<std::string> seen;
  const auto free = static_cast<std::size_t>(sys.free_count);

  for (std::size_t idx = 0; idx < total_ops; ++idx) {
    if (visited[idx]) continue;
    const SymmetryOp h = group.op_at(idx);
    for (const auto& g : group.elements()) visited[group.index(normalized(compose(h, g), n))] = 1;

    const bool flip = flips_color(h);
    ParityUnionFind uf(free);
    bool consistent = true;
    for (std::size_t i = 0; i < cells && consistent; ++i) {
      const std::size_t j = cell_index(apply(h, cell_at(i, n)), n);
      const bool rel = (sys.complemented[i] != sys.complemented[j]) != flip;
      consistent = uf.unite(static_cast<std::size_t>(sys.orbit_of[i]),
                            static_cast<std::size_t>(sys.orbit_of[j]), rel);
    }
    if (!consistent) continue;

    std::string signature(free, '\0');
    std::vector<int> component_of_root(free, -1);
    std::vector<std::uint64_t> masks;
    std::vector<bool> lowest_parity;
    std::uint64_t base = 0;
    for (std::size_t b = 0; b < free; ++b) {
      const auto [root, parity] = uf.find(b);
      int& comp = component_of_root[root];
      if (comp < 0) {
        comp = static_cast<int>(masks.size());
        masks.push_back(0);
        lowest_parity.push_back(parity);
      }
      masks[static_cast<std::size_t>(comp)] |= std::uint64_t{1} << b;
      // parity relative to the component's lowest bit
      const bool rel = parity != lowest_parity[static_cast<std::size_t>(comp)];
      if (rel) base |= std::uint64_t{1} << b;
      signature[b] = static_cast<char>(2 * comp + (rel ? 1 : 0));
    }
    if (!seen.insert(signature).second) continue;

    std::uint64_t x = base;
    marked.set(x);
    const std::uint64_t steps = std::uint64_t{1} << masks.size();
    for (std::uint64_t i = 1; i < steps; ++i) {
      x ^= masks[static_cast<std::size_t>(std::countr_zero(i))];
      marked.set(x);
    }
  }
}

std::vector<BitAction> policy_actions(const OpGroup& group, const OrbitSystem& sys,
                                      const EquivalencePolicy& policy) {
  const int n = group.box();
  std::vector<BitAction> actions;
  std::unordered_set<std::string> seen;
  for (const SymmetryOp& t : policy_ops(policy, n)) {
    if (group.contains(t) || !group.normalized_by(t)) continue;
    const bool flip = flips_color(t);
    std::vector<int> perm(static_cast<std::size_t>(sys.free_count));
    std::uint64_t mask = 0;
    std::string signature;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      const std::size_t j =
          cell_index(apply(t, cell_at(static_cast<std::size_t>(sys.representative[i]), n)), n);
      perm[i] = sys.orbit_of[j];
      const bool m = (sys.complemented[j] != 0) != flip;
      if (m) mask |= std::uint64_t{1} << i;
      signature += fmt::format("{}{},", perm[i], m ? "-" : "+");
    }
    if (seen.insert(signature).second) actions.emplace_back(perm, mask);
  }
  return actions;
}

}  // namespace

FamilyStats for_each_member(const GroupSpec& spec, const EnumerationOptions& options,
                            const std::function<void(const CatalogEntry&)>& visit) {
  FamilyStats stats;
  const int n = spec.order;
  const OrbitSystem sys = orbits(spec.generators, n);
  stats.free_count = sys.free_count;
  stats.contradictory = sys.contradictory;
  if (sys.contradictory) return stats;
  if (sys.free_count > 40 || (std::uint64_t{1} << sys.free_count) > options.cap) {
    throw CapExceeded(sys.free_count, options.cap);
  }
  const std::uint64_t total = std::uint64_t{1} << sys.free_count;
  stats.colorings = total;

  const OpGroup group(spec.generators, n);
  Bitmap marked(total);
  mark_extra_symmetric(group, sys, marked);
  stats.extra_symmetric = marked.count();
  const std::vector<BitAction> actions = policy_actions(group, sys, options.policy);

  for (std::uint64_t x = 0; x < total; ++x) {
    if (marked.test(x)) continue;
    const bool first =
        std::all_of(actions.begin(), actions.end(), [&](const BitAction& a) { return a(x) >= x; });
    if (!first) {
      ++stats.duplicates;
      continue;
    }
    CatalogEntry e;
    e.design = sys.design_for(x);
    e.hangs = hangs_together(e.design);
    if (!e.hangs && !options.include_falling_apart) {
      ++stats.falls_apart;
      continue;
    }
    e.species = spec.params;
    e.coloring = x;
    e.order = n;
    e.genus = spec.genus_expected;
    e.isonemal = isonemality_condition(spec.params.tag, spec.params.ell, spec.params.w);
    if (options.analyze) {
      e.order = order_of(e.design);
      e.genus = genus_of(e.design).genus;
      e.isonemal = is_isonemal(e.design);
      if (is_twill(e.design)) e.twill = twill_name(e.design);
    }
    if (options.compute_keys) e.key = canonical_key(e.design, options.policy);
    ++stats.emitted;
    visit(e);
  }
  return stats;
}

FamilyResult enumerate_family(const GroupSpec& spec, const EnumerationOptions& options) {
  FamilyResult r;
  r.spec = spec;
  r.stats = for_each_member(spec, options, [&](const CatalogEntry& e) { r.entries.push_back(e); });
  return r;
}

FamilyResult enumerate_family(const GroupSpec& spec, const EquivalencePolicy& policy,
                              bool include_falling_apart) {
  EnumerationOptions o;
  o.policy = policy;
  o.include_falling_apart = include_falling_apart;
  return enumerate_family(spec, o);
}

}  // namespace isonemal
