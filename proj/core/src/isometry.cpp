#include "isonemal/isometry.hpp"

#include <fmt/format.h>

namespace isonemal {

namespace {

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

bool even(int v) { return (v & 1) == 0; }

}  // namespace

Matrix2 matrix_of(Linear l) {
  switch (l) {
    case Linear::identity: return {1, 0, 0, 1};
    case Linear::rot90: return {0, -1, 1, 0};
    case Linear::rot180: return {-1, 0, 0, -1};
    case Linear::rot270: return {0, 1, -1, 0};
    case Linear::flip_x: return {-1, 0, 0, 1};
    case Linear::flip_y: return {1, 0, 0, -1};
    case Linear::diag: return {0, 1, 1, 0};
    case Linear::antidiag: return {0, -1, -1, 0};
  }
  return {1, 0, 0, 1};
}

Linear linear_of(const Matrix2& m) {
  for (Linear l : all_linear) {
    const Matrix2 k = matrix_of(l);
    if (k.a == m.a && k.b == m.b && k.c == m.c && k.d == m.d) return l;
  }
  throw std::invalid_argument("matrix is not a grid symmetry");
}

Linear compose(Linear a, Linear b) {
  const Matrix2 p = matrix_of(a);
  const Matrix2 q = matrix_of(b);
  return linear_of({p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c,
                    p.c * q.b + p.d * q.d});
}

Linear invert(Linear a) {
  switch (a) {
    case Linear::rot90: return Linear::rot270;
    case Linear::rot270: return Linear::rot90;
    default: return a;
  }
}

bool swaps_axes(Linear l) {
  return l == Linear::rot90 || l == Linear::rot270 || l == Linear::diag ||
         l == Linear::antidiag;
}

bool is_reflection(Linear l) {
  return l == Linear::flip_x || l == Linear::flip_y || l == Linear::diag ||
         l == Linear::antidiag;
}

QCoord apply(Linear l, QCoord p) {
  const Matrix2 m = matrix_of(l);
  return {m.a * p.x + m.b * p.y, m.c * p.x + m.d * p.y};
}

int color_sign(const SymmetryOp& a) { return swaps_axes(a.linear) != a.tau ? -1 : 1; }

SymmetryOp identity_op() { return {}; }

SymmetryOp translation(int dx, int dy, bool tau) { return {Linear::identity, {dx, dy}, tau}; }

SymmetryOp cell_translation(int dx, int dy, bool tau) { return translation(2 * dx, 2 * dy, tau); }

SymmetryOp diagonal_glide(int c, int t, bool tau) {
  return {Linear::diag, {t - c, t + c}, tau};
}

SymmetryOp compose(const SymmetryOp& a, const SymmetryOp& b) {
  const QCoord s = apply(a.linear, b.shift);
  return {compose(a.linear, b.linear), {s.x + a.shift.x, s.y + a.shift.y}, a.tau != b.tau};
}

SymmetryOp invert(const SymmetryOp& a) {
  const Linear li = invert(a.linear);
  const QCoord s = apply(li, a.shift);
  return {li, {-s.x, -s.y}, a.tau};
}

QCoord apply(const SymmetryOp& a, QCoord p) {
  const QCoord q = apply(a.linear, p);
  return {q.x + a.shift.x, q.y + a.shift.y};
}

bool maps_cells(const SymmetryOp& a) { return even(a.shift.x) && even(a.shift.y); }

Cell apply(const SymmetryOp& a, Cell c) {
  if (!maps_cells(a)) throw LatticeError();
  const QCoord q = apply(a, center_of(c));
  return {(q.x - 1) / 2, (q.y - 1) / 2};
}

SymmetryOp normalized(const SymmetryOp& a, int n) {
  return {a.linear, {mod(a.shift.x, 2 * n), mod(a.shift.y, 2 * n)}, a.tau};
}

bool is_symmetry_of(const SymmetryOp& a, const Design& d) {
  if (!maps_cells(a)) throw LatticeError();
  const int n = d.size();
  const bool flip = flips_color(a);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const Cell img = apply(a, Cell{x, y});
      if (d.dark(img) != (d.dark(x, y) != flip)) return false;
    }
  }
  return true;
}

Design transform(const Design& d, const SymmetryOp& a) {
  if (!maps_cells(a)) throw LatticeError();
  const int n = d.size();
  const bool flip = flips_color(a);
  Design out(n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const Cell img = apply(a, Cell{x, y});
      out.set(img.x, img.y, d.dark(x, y) != flip);
    }
  }
  return out;
}

OpClass classify(const SymmetryOp& a) {
  if (!maps_cells(a)) throw LatticeError();
  OpClass c;
  c.tau = a.tau;
  const int s1 = a.shift.x;
  const int s2 = a.shift.y;
  switch (a.linear) {
    case Linear::identity:
      c.kind = a.tau ? OpKind::tau_translation : OpKind::translation;
      break;
    case Linear::rot90:
      c.kind = OpKind::rotation;
      c.quarter_turns = 1;
      c.center = QCoord{(s1 - s2) / 2, (s1 + s2) / 2};
      break;
    case Linear::rot180:
      c.kind = OpKind::rotation;
      c.quarter_turns = 2;
      c.center = QCoord{s1 / 2, s2 / 2};
      break;
    case Linear::rot270:
      c.kind = OpKind::rotation;
      c.quarter_turns = 3;
      c.center = QCoord{(s1 + s2) / 2, (s2 - s1) / 2};
      break;
    case Linear::flip_x:
      c.slope = AxisSlope::infinite;
      c.offset = s1 / 2;
      c.glide = s2;
      break;
    case Linear::flip_y:
      c.slope = AxisSlope::zero;
      c.offset = s2 / 2;
      c.glide = s1;
      break;
    case Linear::diag:
      c.slope = AxisSlope::plus_one;
      c.offset = (s2 - s1) / 2;
      c.glide = (s1 + s2) / 2;
      c.mirror_position = even(c.offset);
      break;
    case Linear::antidiag:
      c.slope = AxisSlope::minus_one;
      c.offset = (s1 + s2) / 2;
      c.glide = (s1 - s2) / 2;
      c.mirror_position = even(c.offset);
      break;
  }
  if (is_reflection(a.linear)) c.kind = c.glide == 0 ? OpKind::mirror : OpKind::glide;
  return c;
}

std::string_view to_string(OpKind k) {
  switch (k) {
    case OpKind::translation: return "translation";
    case OpKind::tau_translation: return "tau-translation";
    case OpKind::mirror: return "mirror";
    case OpKind::glide: return "glide";
    case OpKind::rotation: return "rotation";
  }
  return "?";
}

std::string to_string(const OpClass& c) {
  const char* side = c.tau ? "τ" : "e";
  switch (c.slope) {
    case AxisSlope::none:
      if (c.kind == OpKind::rotation) {
        return fmt::format("rotation center=({},{}) turns={} side={}", c.center->x, c.center->y,
                           c.quarter_turns, side);
      }
      return fmt::format("{} axis=- glide=- side={}", to_string(c.kind), side);
    case AxisSlope::plus_one:
      return fmt::format("{} axis=1,{} glide={}β side={}", to_string(c.kind), c.offset, c.glide,
                         side);
    case AxisSlope::minus_one:
      return fmt::format("{} axis=-1,{} glide={}β side={}", to_string(c.kind), c.offset, c.glide,
                         side);
    case AxisSlope::zero:
      return fmt::format("{} axis=0,{} glide={}u side={}", to_string(c.kind), c.offset, c.glide,
                         side);
    case AxisSlope::infinite:
      return fmt::format("{} axis=inf,{} glide={}u side={}", to_string(c.kind), c.offset,
                         c.glide, side);
  }
  return {};
}

std::string to_string(const SymmetryOp& a) {
  if (!maps_cells(a)) {
    return fmt::format("op linear={} shift=({},{}) side={}", static_cast<int>(a.linear),
                       a.shift.x, a.shift.y, a.tau ? "τ" : "e");
  }
  const OpClass c = classify(a);
  if (c.kind == OpKind::translation || c.kind == OpKind::tau_translation) {
    return fmt::format("{} axis=- glide=({},{}) side={}", to_string(c.kind), a.shift.x,
                       a.shift.y, a.tau ? "τ" : "e");
  }
  return to_string(c);
}

}  // namespace isonemal
