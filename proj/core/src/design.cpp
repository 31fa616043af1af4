#include "isonemal/design.hpp"

#include <algorithm>
#include <charconv>

namespace isonemal {

Design::Design(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("design side must be positive");
  cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Design::Design(int n, std::vector<std::uint8_t> cells) : n_(n), cells_(std::move(cells)) {
  if (n < 1) throw std::invalid_argument("design side must be positive");
  if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("cell count does not match n*n");
  }
  for (auto& c : cells_) c = c ? 1 : 0;
}

Design Design::from_rows(const std::vector<std::string>& rows_top_first) {
  const int n = static_cast<int>(rows_top_first.size());
  Design d(n);
  for (int r = 0; r < n; ++r) {
    const auto& row = rows_top_first[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged row");
    for (int x = 0; x < n; ++x) {
      const char ch = row[static_cast<std::size_t>(x)];
      if (ch != '0' && ch != '1') throw std::invalid_argument("invalid cell character");
      d.set(x, n - 1 - r, ch == '1');
    }
  }
  return d;
}

std::array<ViewId, 8> all_views() {
  std::array<ViewId, 8> out{};
  std::size_t i = 0;
  for (Side s : {Side::obverse, Side::reverse}) {
    for (Compass c : {Compass::south, Compass::west, Compass::north, Compass::east}) {
      out[i++] = ViewId{s, c};
    }
  }
  return out;
}

ViewId compose(ViewId first, ViewId second) {
  const int turns = (static_cast<int>(first.compass) + static_cast<int>(second.compass)) % 4;
  const bool reverse = (first.side == Side::reverse) != (second.side == Side::reverse);
  return ViewId{reverse ? Side::reverse : Side::obverse, static_cast<Compass>(turns)};
}

std::string to_string(ViewId v) {
  static constexpr std::array<std::string_view, 4> names{"south", "west", "north", "east"};
  std::string out = v.side == Side::obverse ? "obverse-" : "reverse-";
  out += names[static_cast<std::size_t>(v.compass)];
  return out;
}

std::string_view to_string(Genus g) {
  switch (g) {
    case Genus::I: return "I";
    case Genus::II: return "II";
    case Genus::both: return "I+II";
    case Genus::other: return "other";
  }
  return "other";
}

namespace {

bool horizontal_period(const Design& d, int p) {
  const int n = d.size();
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (d.dark(x + p, y) != d.dark(x, y)) return false;
    }
  }
  return true;
}

bool vertical_period(const Design& d, int p) {
  const int n = d.size();
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (d.dark(x, y + p) != d.dark(x, y)) return false;
    }
  }
  return true;
}

// colour(x, y + 1) == colour(x - s, y) XOR flip, for all cells
bool row_shift(const Design& d, int s, bool flip) {
  const int n = d.size();
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (d.dark(x, y + 1) != (d.dark(x - s, y) != flip)) return false;
    }
  }
  return true;
}

}  // namespace

int order_of(const Design& d) {
  const int n = d.size();
  for (int p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    if (horizontal_period(d, p) && vertical_period(d, p)) return p;
  }
  return n;
}

GenusReport genus_of(const Design& d) {
  GenusReport r;
  const int n = d.size();
  for (int s = 0; s < n && !(r.offset_i && r.offset_ii); ++s) {
    if (!r.offset_i && row_shift(d, s, false)) r.offset_i = s;
    if (!r.offset_ii && row_shift(d, s, true)) r.offset_ii = s;
  }
  if (r.offset_i && r.offset_ii) {
    r.genus = Genus::both;
  } else if (r.offset_i) {
    r.genus = Genus::I;
  } else if (r.offset_ii) {
    r.genus = Genus::II;
  }
  return r;
}

Design complement(const Design& d) {
  std::vector<std::uint8_t> cells(d.cells().begin(), d.cells().end());
  for (auto& c : cells) c = c ? 0 : 1;
  return Design(d.size(), std::move(cells));
}

Design translate(const Design& d, int dx, int dy) {
  const int n = d.size();
  Design out(n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) out.set(x + dx, y + dy, d.dark(x, y));
  }
  return out;
}

Design tile(const Design& d, int k) {
  if (k < 1) throw std::invalid_argument("tile factor must be positive");
  const int m = d.size() * k;
  Design out(m);
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) out.set(x, y, d.dark(x, y));
  }
  return out;
}

Design view(const Design& d, ViewId v) {
  const int n = d.size();
  const int turns = static_cast<int>(v.compass);
  // A quarter turn carries warps onto wefts, and the colouring is relative to
  // the viewer, so odd turns complement.
  const bool flip = ((turns % 2) == 1) != (v.side == Side::reverse);
  Design out(n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      int tx = x;
      int ty = y;
      for (int t = 0; t < turns; ++t) {
        const int nx = n - 1 - ty;
        ty = tx;
        tx = nx;
      }
      out.set(tx, ty, d.dark(x, y) != flip);
    }
  }
  return out;
}

bool is_trivial(const Design& d) {
  const auto cells = d.cells();
  return std::all_of(cells.begin(), cells.end(), [&](std::uint8_t c) { return c == cells[0]; });
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Design parse(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') lines.emplace_back(line_no, line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError(line_no, "empty input");

  const auto [header_line, header] = lines.front();
  constexpr std::string_view keyword = "order ";
  if (header.substr(0, keyword.size()) != keyword) {
    throw ParseError(header_line, "expected 'order <n>' header");
  }
  const std::string_view num = header.substr(keyword.size());
  int n = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  if (ec != std::errc{} || ptr != num.data() + num.size() || n < 1) {
    throw ParseError(header_line, "invalid order");
  }

  Design d(n);
  std::size_t row = 0;
  for (std::size_t i = 1; i < lines.size(); ++i, ++row) {
    const auto [ln, line] = lines[i];
    if (row >= static_cast<std::size_t>(n)) throw ParseError(ln, "too many rows");
    if (line.size() != static_cast<std::size_t>(n)) throw ParseError(ln, "ragged row");
    for (std::size_t x = 0; x < line.size(); ++x) {
      if (line[x] != '0' && line[x] != '1') throw ParseError(ln, "invalid character");
      d.set(static_cast<int>(x), n - 1 - static_cast<int>(row), line[x] == '1');
    }
  }
  if (row != static_cast<std::size_t>(n)) throw ParseError(line_no, "too few rows");
  return d;
}

std::string serialize(const Design& d) {
  const int n = d.size();
  std::string out = "order " + std::to_string(n) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1));
  for (int y = n - 1; y >= 0; --y) {
    for (int x = 0; x < n; ++x) out.push_back(d.dark(x, y) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

}  // namespace isonemal
