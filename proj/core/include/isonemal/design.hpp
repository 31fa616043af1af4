#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isonemal {

/// A cell of the plane, indexed by the warp (x, rightward) and weft (y, upward)
/// crossing there.
struct Cell {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Periodic two-layer design stored in an n-by-n period box.
///
/// A dark cell means the warp is uppermost there. Colours outside the box are
/// obtained by reducing coordinates modulo n, so translations by (n, 0) and
/// (0, n) are symmetries of every Design.
class Design {
 public:
  /// All-pale design of side n.
  explicit Design(int n);
  /// `cells` is indexed y * n + x.
  Design(int n, std::vector<std::uint8_t> cells);

  /// Rows are given top row first, as in the text format; '1' is dark.
  static Design from_rows(const std::vector<std::string>& rows_top_first);

  int size() const { return n_; }

  bool dark(int x, int y) const { return cells_[index(x, y)] != 0; }
  bool dark(Cell c) const { return dark(c.x, c.y); }
  void set(int x, int y, bool dark) { cells_[index(x, y)] = dark ? 1 : 0; }

  std::span<const std::uint8_t> cells() const { return cells_; }

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::size_t index(int x, int y) const {
    int xm = x % n_;
    int ym = y % n_;
    if (xm < 0) xm += n_;
    if (ym < 0) ym += n_;
    return static_cast<std::size_t>(ym) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(xm);
  }

  int n_;
  std::vector<std::uint8_t> cells_;
};

enum class Side : std::uint8_t { obverse, reverse };
enum class Compass : std::uint8_t { south, west, north, east };

/// Viewpoint on a fixed fabric: which side is looked at and from which
/// compass direction. Compass values are ordered by counter-clockwise quarter
/// turns of the picture.
struct ViewId {
  Side side = Side::obverse;
  Compass compass = Compass::south;

  friend bool operator==(const ViewId&, const ViewId&) = default;
};

std::array<ViewId, 8> all_views();
/// The view reached by first taking `first` and then moving by `second`.
ViewId compose(ViewId first, ViewId second);
std::string to_string(ViewId v);

enum class Genus : std::uint8_t { I, II, both, other };

std::string_view to_string(Genus g);

struct GenusReport {
  Genus genus = Genus::other;
  /// Smallest s with colour(x, y + 1) == colour(x - s, y).
  std::optional<int> offset_i;
  /// Smallest s with colour(x, y + 1) == !colour(x - s, y).
  std::optional<int> offset_ii;
};

/// Minimal p with (p, 0) and (0, p) both colour-preserving translations.
int order_of(const Design& d);
GenusReport genus_of(const Design& d);

Design complement(const Design& d);
Design translate(const Design& d, int dx, int dy);
/// k-by-k copies of the period box.
Design tile(const Design& d, int k);
Design view(const Design& d, ViewId v);

bool is_trivial(const Design& d);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Text format: `order <n>` then n rows of n characters from {0,1}, top row
/// (y = n - 1) first. Lines starting with '#' are ignored.
Design parse(std::string_view text);
std::string serialize(const Design& d);

}  // namespace isonemal
