#include "isonemal/species.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace isonemal {

namespace {

constexpr std::array<std::string_view, 18> tag_names{
    "1_m", "1_e", "1_o", "2_m", "2_e", "2_o", "3",   "4_e", "4_o",
    "5_e", "5_o", "6",   "7_e", "7_o", "8_e", "8_o", "9",   "10"};

bool even(int v) { return v % 2 == 0; }

bool mirror_position_glides(SpeciesTag t) {
  return t == SpeciesTag::s1_m || t == SpeciesTag::s2_m || t == SpeciesTag::s3;
}

bool displaced_glides(SpeciesTag t) {
  switch (t) {
    case SpeciesTag::s1_e:
    case SpeciesTag::s1_o:
    case SpeciesTag::s2_e:
    case SpeciesTag::s2_o:
    case SpeciesTag::s4_e:
    case SpeciesTag::s4_o: return true;
    default: return false;
  }
}

bool rhombic(SpeciesTag t) { return species_number(t) >= 8; }

std::optional<std::string> axis_parity_problem(SpeciesTag t, int ell, int w) {
  if (mirror_position_glides(t) && !even(ell)) {
    return "glide axes in mirror position need an even length";
  }
  if (displaced_glides(t) && even(ell)) return "displaced glide axes need an odd length";
  if (rhombic(t) && even(ell) != even(w)) return "rhomb corners need length and width of equal parity";
  return std::nullopt;
}

std::optional<std::string> subtype_problem(SpeciesTag t, int ell, int w) {
  switch (t) {
    case SpeciesTag::s1_e:
    case SpeciesTag::s2_e:
    case SpeciesTag::s4_e:
      if (!even(w)) return "subtype e needs an even width";
      break;
    case SpeciesTag::s1_o:
    case SpeciesTag::s2_o:
    case SpeciesTag::s4_o:
      if (even(w)) return "subtype o needs an odd width";
      break;
    case SpeciesTag::s5_e:
      if (even(ell) == even(w)) return "subtype e needs exactly one even dimension";
      break;
    case SpeciesTag::s5_o:
    case SpeciesTag::s7_o:
    case SpeciesTag::s8_o:
    case SpeciesTag::s10:
      if (even(ell) || even(w)) return "needs both dimensions odd";
      break;
    case SpeciesTag::s6:
      if (!even(w)) return "needs an even width";
      break;
    case SpeciesTag::s7_e:
      if (!even(ell) || even(w)) return "needs an even length and an odd width";
      break;
    case SpeciesTag::s8_e:
    case SpeciesTag::s9:
      if (!even(ell) || !even(w)) return "needs both dimensions even";
      break;
    default: break;
  }
  return std::nullopt;
}

std::optional<std::string> minimum_problem(SpeciesTag t, int ell, int w) {
  switch (t) {
    case SpeciesTag::s1_m:
    case SpeciesTag::s2_m:
    case SpeciesTag::s3:
    case SpeciesTag::s7_e:
    case SpeciesTag::s7_o:
      if (w <= 1) return "width 1 gives a twill with extra symmetry";
      break;
    case SpeciesTag::s1_e:
    case SpeciesTag::s2_e:
    case SpeciesTag::s4_e:
      if (ell <= 1) return "length 1 is too small";
      break;
    case SpeciesTag::s1_o:
    case SpeciesTag::s2_o:
    case SpeciesTag::s4_o:
    case SpeciesTag::s5_e:
    case SpeciesTag::s5_o:
      if (ell <= 1 || w <= 1) return "length and width must both exceed 1";
      break;
    case SpeciesTag::s8_o:
    case SpeciesTag::s10:
      if (ell <= 1) return "length 1 is too small";
      if (w == 1 && ell < 7) return "width 1 needs length at least 7";
      break;
    default: break;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(SpeciesTag t) { return tag_names[static_cast<std::size_t>(t)]; }

std::optional<SpeciesTag> parse_species(std::string_view s) {
  for (SpeciesTag t : all_species) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

int species_number(SpeciesTag t) {
  switch (t) {
    case SpeciesTag::s1_m:
    case SpeciesTag::s1_e:
    case SpeciesTag::s1_o: return 1;
    case SpeciesTag::s2_m:
    case SpeciesTag::s2_e:
    case SpeciesTag::s2_o: return 2;
    case SpeciesTag::s3: return 3;
    case SpeciesTag::s4_e:
    case SpeciesTag::s4_o: return 4;
    case SpeciesTag::s5_e:
    case SpeciesTag::s5_o: return 5;
    case SpeciesTag::s6: return 6;
    case SpeciesTag::s7_e:
    case SpeciesTag::s7_o: return 7;
    case SpeciesTag::s8_e:
    case SpeciesTag::s8_o: return 8;
    case SpeciesTag::s9: return 9;
    case SpeciesTag::s10: return 10;
  }
  return 0;
}

std::string to_string(const SpeciesParams& p) {
  return fmt::format("{}({},{})", to_string(p.tag), p.ell, p.w);
}

bool ParamVerdict::violates(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const RuleViolation& v) { return v.rule == rule; });
}

bool structurally_feasible(SpeciesTag tag, int ell, int w) {
  return ell >= 1 && w >= 1 && !axis_parity_problem(tag, ell, w) && !subtype_problem(tag, ell, w);
}

bool isonemality_condition(SpeciesTag tag, int ell, int w) {
  if (ell < 1 || w < 1) return false;
  if (!rhombic(tag) || !even(ell)) return std::gcd(ell, w) == 1;
  if (!even(w)) return false;
  const int h = ell / 2;
  const int k = w / 2;
  return std::gcd(h, k) == 1 && even(h) != even(k);
}

ParamVerdict validate_params(SpeciesTag tag, int ell, int w) {
  ParamVerdict v;
  auto add = [&](std::string_view rule, std::string detail) {
    v.violations.push_back({std::string(rule), std::move(detail)});
  };
  if (ell < 1 || w < 1) {
    add(rules::positive, "length and width must be at least 1");
    return v;
  }
  if (auto p = axis_parity_problem(tag, ell, w)) add(rules::axis_parity, *p);
  if (auto p = subtype_problem(tag, ell, w)) add(rules::subtype, *p);
  if (!isonemality_condition(tag, ell, w)) {
    if (rhombic(tag) && even(ell) && even(w)) {
      add(rules::isonemal, fmt::format("halves {} and {} must be coprime and differ in parity",
                                       ell / 2, w / 2));
    } else {
      add(rules::isonemal, fmt::format("gcd({}, {}) = {} must be 1", ell, w, std::gcd(ell, w)));
    }
  }
  if (auto p = minimum_problem(tag, ell, w)) add(rules::minimum, *p);
  if ((tag == SpeciesTag::s1_e || tag == SpeciesTag::s2_e) && ell == 3 && w == 2) {
    add(rules::excluded, "(3,2) forces a lattice unit with more symmetry");
  }
  return v;
}

int formula_order(SpeciesTag tag, int ell, int w) {
  switch (species_number(tag)) {
    case 4:
    case 7: return 4 * ell * w;
    case 8:
    case 9: return ell * w;
    default: return 2 * ell * w;
  }
}

int formula_period(SpeciesTag tag, int ell, int w) {
  switch (species_number(tag)) {
    case 3:
    case 4:
    case 6:
    case 7: return 4 * ell * w;
    case 8: return ell * w;
    default: return 2 * ell * w;
  }
}

Genus formula_genus(SpeciesTag tag) {
  switch (species_number(tag)) {
    case 3:
    case 6:
    case 9: return Genus::II;
    case 4:
    case 7:
    case 10: return Genus::both;
    default: return Genus::I;
  }
}

std::vector<SymmetryOp> build_generators(const SpeciesParams& p) {
  const auto [tag, ell, w] = p;
  if (!structurally_feasible(tag, ell, w)) {
    throw std::invalid_argument("no group of shape " + std::string(to_string(tag)) +
                                fmt::format(" with length {} and width {}", ell, w));
  }
  const int c0 = displaced_glides(tag) ? 1 : 0;
  const SymmetryOp mirror = diagonal_glide(0, 0, true);
  switch (species_number(tag)) {
    case 1:
      return {diagonal_glide(c0, ell, false), cell_translation(ell, ell),
              cell_translation(w, -w)};
    case 2:
      return {diagonal_glide(c0, ell, true), cell_translation(ell, ell), cell_translation(w, -w)};
    case 3:
    case 4:
      return {diagonal_glide(c0, ell, false), cell_translation(ell, ell),
              cell_translation(w, -w, true)};
    case 5: return {mirror, cell_translation(ell, ell), cell_translation(w, -w)};
    case 6:
    case 7: return {mirror, cell_translation(ell, ell, true), cell_translation(w, -w)};
    case 8: return {mirror, translation(ell + w, ell - w), translation(ell - w, ell + w)};
    default:
      return {mirror, translation(ell + w, ell - w, true), translation(ell - w, ell + w, true)};
  }
}

namespace {

std::pair<LatticeUnit, LatticeUnit> units_for(const SpeciesParams& p) {
  const auto [tag, ell, w] = p;
  const int c0 = displaced_glides(tag) ? 1 : 0;
  LatticeUnit g;
  g.length = ell;
  g.width = w;
  if (rhombic(tag)) {
    g.shape = UnitShape::rhombic;
    g.anchor = {-w, w};
    g.side_a = {(ell + w) / 2, (ell - w) / 2};
    g.side_b = {(ell - w) / 2, (ell + w) / 2};
    LatticeUnit h = g;
    if (species_number(tag) != 8) {
      h.shape = UnitShape::rectangular;
      h.side_a = {ell, ell};
      h.side_b = {w, -w};
    }
    return {g, h};
  }
  g.anchor = {0, c0};
  g.side_a = {ell, ell};
  g.side_b = {w, -w};
  LatticeUnit h = g;
  switch (species_number(tag)) {
    case 3:
    case 4:
      h.width = 2 * w;
      h.side_b = {2 * w, -2 * w};
      break;
    case 6:
    case 7:
      h.length = 2 * ell;
      h.side_a = {2 * ell, 2 * ell};
      break;
    default: break;
  }
  return {g, h};
}

}  // namespace

GroupSpec group_for(const SpeciesParams& p) {
  const ParamVerdict verdict = validate_params(p);
  if (!verdict.ok()) {
    std::string msg = "invalid parameters " + to_string(p) + ":";
    for (const auto& v : verdict.violations) msg += " [" + v.rule + "] " + v.detail + ";";
    throw std::invalid_argument(msg);
  }
  GroupSpec g;
  g.params = p;
  g.generators = build_generators(p);
  std::tie(g.g1_unit, g.h1_unit) = units_for(p);
  const TranslationLattice lattice(g.generators);
  g.order = lattice.order();
  g.period_area = static_cast<int>(lattice.period_area());
  g.genus_expected = lattice.genus();
  if (g.order != formula_order(p.tag, p.ell, p.w) ||
      g.period_area != formula_period(p.tag, p.ell, p.w) ||
      g.genus_expected != formula_genus(p.tag)) {
    throw std::logic_error("constructed group disagrees with the formulas for " + to_string(p));
  }
  return g;
}

namespace {

using Row = std::array<long, 3>;

std::array<Row, 3> hermite_basis(std::vector<Row> rows) {
  std::array<Row, 3> basis{};
  for (std::size_t col = 0; col < 3; ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || std::labs(rows[i][col]) < std::labs(rows[best][col])) best = i;
      }
      if (best == rows.size()) throw std::invalid_argument("translations do not span the plane");
      bool reduced_all = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == best || rows[i][col] == 0) continue;
        const long q = rows[i][col] / rows[best][col];
        for (std::size_t k = 0; k < 3; ++k) rows[i][k] -= q * rows[best][k];
        if (rows[i][col] != 0) reduced_all = false;
      }
      if (reduced_all) {
        Row pivot = rows[best];
        if (pivot[col] < 0) {
          for (auto& v : pivot) v = -v;
        }
        basis[col] = pivot;
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
  }
  return basis;
}

Row as_row(const SymmetryOp& t) { return {t.shift.x / 2, t.shift.y / 2, t.tau ? 1L : 0L}; }

}  // namespace

TranslationLattice::TranslationLattice(const std::vector<SymmetryOp>& generators) {
  std::optional<SymmetryOp> r0;
  for (const auto& g : generators) {
    if (!maps_cells(g)) throw LatticeError();
    if (g.linear == Linear::identity) continue;
    if (!r0) {
      r0 = g;
    } else if (g.linear != r0->linear) {
      throw std::invalid_argument("only one reflection direction is supported");
    }
  }
  if (r0 && compose(r0->linear, r0->linear) != Linear::identity) {
    throw std::invalid_argument("only reflections are supported");
  }
  std::vector<Row> rows{{0, 0, 2}};
  for (const auto& g : generators) {
    if (g.linear == Linear::identity) {
      rows.push_back(as_row(g));
      if (r0) rows.push_back(as_row(compose(compose(*r0, g), invert(*r0))));
    } else {
      rows.push_back(as_row(compose(g, invert(*r0))));
      rows.push_back(as_row(compose(*r0, g)));
    }
  }
  rows_ = hermite_basis(std::move(rows));
}

bool TranslationLattice::contains(int dx, int dy, bool tau) const {
  long x = dx;
  long y = dy;
  long t = tau ? 1 : 0;
  if (x % rows_[0][0] != 0) return false;
  long k = x / rows_[0][0];
  y -= k * rows_[0][1];
  t -= k * rows_[0][2];
  if (y % rows_[1][1] != 0) return false;
  k = y / rows_[1][1];
  t -= k * rows_[1][2];
  return t % rows_[2][2] == 0;
}

bool TranslationLattice::contradictory() const { return contains(0, 0, true); }

long TranslationLattice::period_area() const {
  const long base = rows_[0][0] * rows_[1][1];
  if (contradictory()) return base;
  const bool mixed = (rows_[0][2] % 2 != 0) || (rows_[1][2] % 2 != 0);
  return mixed ? 2 * base : base;
}

int TranslationLattice::order() const {
  const long limit = 2 * rows_[0][0] * rows_[1][1];
  for (int p = 1; p <= limit; ++p) {
    if (contains(p, 0, false) && contains(0, p, false)) return p;
  }
  return static_cast<int>(limit);
}

Genus TranslationLattice::genus() const {
  const int n = order();
  bool one = false;
  bool two = false;
  for (int s = 0; s < n; ++s) {
    one = one || contains(s, 1, false);
    two = two || contains(s, 1, true);
  }
  if (one && two) return Genus::both;
  if (one) return Genus::I;
  if (two) return Genus::II;
  return Genus::other;
}

std::vector<SpeciesParams> candidates_for_order(int N) {
  if (N <= 4) throw std::out_of_range("orders of 4 or less are out of scope");
  std::vector<SpeciesParams> out;
  for (SpeciesTag t : all_species) {
    for (int ell = 1; ell <= N; ++ell) {
      for (int w = 1; w <= N; ++w) {
        if (formula_order(t, ell, w) == N && validate_params(t, ell, w).ok()) {
          out.push_back({t, ell, w});
        }
      }
    }
  }
  return out;
}

namespace {

int genus_i_offset_mod_order(const Design& d, int p) {
  const GenusReport g = genus_of(d);
  if (!g.offset_i) return -1;
  return *g.offset_i % p;
}

std::vector<bool> column_sequence(const Design& d, int x, int p) {
  std::vector<bool> seq(static_cast<std::size_t>(p));
  for (int y = 0; y < p; ++y) seq[static_cast<std::size_t>(y)] = d.dark(x, y);
  return seq;
}

std::vector<bool> row_sequence(const Design& d, int y, int p) {
  std::vector<bool> seq(static_cast<std::size_t>(p));
  for (int x = 0; x < p; ++x) seq[static_cast<std::size_t>(x)] = d.dark(x, y);
  return seq;
}

// Runs of a cyclic sequence, starting at the first over cell following an
// under cell.
std::vector<int> runs_from(const std::vector<bool>& seq, std::size_t start) {
  std::vector<int> runs;
  const std::size_t p = seq.size();
  bool cur = seq[start];
  int len = 0;
  for (std::size_t i = 0; i < p; ++i) {
    const bool c = seq[(start + i) % p];
    if (c == cur) {
      ++len;
    } else {
      runs.push_back(len);
      cur = c;
      len = 1;
    }
  }
  runs.push_back(len);
  return runs;
}

void min_name_candidates(const std::vector<bool>& seq, std::optional<std::vector<int>>& best) {
  const std::size_t p = seq.size();
  for (std::size_t s = 0; s < p; ++s) {
    if (!seq[s] || seq[(s + p - 1) % p]) continue;
    std::vector<int> r = runs_from(seq, s);
    if (!best || r < *best) best = std::move(r);
  }
}

}  // namespace

bool is_twill(const Design& d) {
  const int p = order_of(d);
  if (p < 2) return false;
  for (ViewId v : all_views()) {
    const Design dv = view(d, v);
    const int off = genus_i_offset_mod_order(dv, p);
    if (off == 1 || off == p - 1) return true;
  }
  return false;
}

std::string twill_name(const Design& d) {
  if (!is_twill(d)) throw std::invalid_argument("design is not a twill");
  const int p = order_of(d);
  std::vector<bool> seq = column_sequence(d, 0, p);
  std::optional<std::vector<int>> best;
  min_name_candidates(seq, best);
  std::reverse(seq.begin(), seq.end());
  min_name_candidates(seq, best);
  std::string out;
  for (std::size_t i = 0; i < best->size(); ++i) {
    if (i) out += '/';
    out += std::to_string((*best)[i]);
  }
  return out;
}

unsigned long long binary_index(const Design& d) {
  const int p = order_of(d);
  if (p > 63) throw std::out_of_range("binary index needs order below 64");
  unsigned long long best = ~0ULL;
  auto consider = [&](std::vector<bool> seq) {
    for (int dir = 0; dir < 2; ++dir) {
      for (int s = 0; s < p; ++s) {
        unsigned long long v = 0;
        for (int i = 0; i < p; ++i) {
          v = (v << 1) | (seq[static_cast<std::size_t>((s + i) % p)] ? 1ULL : 0ULL);
        }
        best = std::min(best, v);
      }
      std::reverse(seq.begin(), seq.end());
    }
  };
  for (int i = 0; i < p; ++i) {
    consider(column_sequence(d, i, p));
    consider(row_sequence(d, i, p));
  }
  return best;
}

}  // namespace isonemal
