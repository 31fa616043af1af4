#include "isonemal/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <fmt/format.h>

namespace isonemal {

std::size_t Catalog::size() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.entries.size();
  return n;
}

bool Catalog::any_cap_exceeded() const {
  return std::any_of(families.begin(), families.end(),
                     [](const CatalogFamily& f) { return f.cap_exceeded; });
}

namespace {

Catalog build(int N, const CatalogOptions& options, bool falls_apart_only) {
  Catalog c;
  c.order = N;
  c.policy = options.policy;
  c.include_falling_apart = options.include_falling_apart || falls_apart_only;
  std::map<std::string, SpeciesParams> owner;
  for (const SpeciesParams& p : candidates_for_order(N)) {
    const int number = species_number(p.tag);
    if (falls_apart_only && number != 3 && number != 6 && number != 9) continue;
    CatalogFamily fam;
    fam.params = p;
    try {
      const GroupSpec spec = group_for(p);
      EnumerationOptions o;
      o.policy = options.policy;
      o.include_falling_apart = c.include_falling_apart;
      o.cap = options.cap;
      o.compute_keys = true;
      fam.stats = for_each_member(spec, o, [&](const CatalogEntry& e) {
        if (e.order != N) {
          c.diagnostics.push_back(
              fmt::format("{}: dropped a design of smaller order {}", to_string(p), e.order));
          return;
        }
        if (falls_apart_only && e.hangs) return;
        fam.entries.push_back(e);
      });
    } catch (const CapExceeded& ex) {
      fam.error = ex.what();
      fam.cap_exceeded = true;
    }
    std::sort(fam.entries.begin(), fam.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.key < b.key; });
    for (const auto& e : fam.entries) {
      auto [it, fresh] = owner.emplace(e.key, p);
      if (!fresh) {
        c.diagnostics.push_back(fmt::format("collision: one design reached from {} and {}",
                                            to_string(it->second), to_string(p)));
      }
    }
    c.families.push_back(std::move(fam));
  }
  return c;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Catalog catalog(int N, const CatalogOptions& options) { return build(N, options, false); }

Catalog falls_apart_list(int N, const CatalogOptions& options) { return build(N, options, true); }

std::string entry_id(int N, const std::string& key, int seq) {
  return fmt::format("{}-{:08x}-{}", N, fnv1a(key) & 0xFFFFFFFFULL, seq);
}

namespace {

template <typename F>
void for_each_id(const Catalog& c, F&& f) {
  std::map<std::string, int> seq;
  for (const auto& fam : c.families) {
    for (const auto& e : fam.entries) {
      const std::string base = entry_id(c.order, e.key, 0);
      const int s = ++seq[base];
      f(entry_id(c.order, e.key, s), e);
    }
  }
}

}  // namespace

std::string summary_tsv(const Catalog& c) {
  std::string out = "id\tspecies\tell\tw\torder\tgenus\tisonemal\thangs\ttwill\n";
  for_each_id(c, [&](const std::string& id, const CatalogEntry& e) {
    out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", id, to_string(e.species.tag),
                       e.species.ell, e.species.w, e.order, to_string(e.genus),
                       e.isonemal ? "yes" : "no", e.hangs ? "yes" : "no",
                       e.twill.value_or("-"));
  });
  return out;
}

void write_catalog(const Catalog& c, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for_each_id(c, [&](const std::string& id, const CatalogEntry& e) {
    std::ofstream f(dir / (id + ".txt"));
    f << "# " << to_string(e.species) << " policy " << to_string(c.policy) << '\n';
    f << serialize(e.design);
  });
  std::ofstream(dir / "summary.tsv") << summary_tsv(c);
}

const std::vector<NamedDesign>& named_designs() {
  using T = SpeciesTag;
  static const std::vector<NamedDesign> table{
      {"12-183-1", {T::s1_m, 2, 3}, 12, 183, false},
      {"12-411-1", {T::s1_m, 2, 3}, 12, 411, false},
      {"12-79-1", {T::s3, 2, 3}, 12, 79, false},
      {"12-203-3", {T::s3, 2, 3}, 12, 203, false},
      {"12-69-2*", {T::s3, 2, 3}, 12, 69, true},
      {"12-35-1", {T::s5_e, 2, 3}, 12, 35, false},
      {"12-69-1", {T::s5_e, 3, 2}, 12, 69, false},
      {"8-11-1", {T::s6, 1, 4}, 8, 11, false},
      {"12-23-1", {T::s6, 3, 2}, 12, 23, false},
      {"12-69-1*", {T::s6, 1, 6}, 12, 69, true},
      {"16-1093-1*", {T::s6, 1, 8}, 16, 1093, true},
      {"12-315-1", {T::s7_o, 1, 3}, 12, 315, false},
      {"8-11-6", {T::s8_e, 2, 4}, 8, 11, false},
      {"8-19-5", {T::s8_e, 4, 2}, 8, 19, false},
      {"15-35-1", {T::s8_o, 5, 3}, 15, 35, false},
      {"15-19-1", {T::s8_o, 3, 5}, 15, 19, false},
      {"8-11-2", {T::s9, 4, 2}, 8, 11, false},
      {"8-19-2", {T::s9, 2, 4}, 8, 19, false},
      {"16-277-4*", {T::s9, 2, 8}, 16, 277, true},
      {"16-1093-3*", {T::s9, 2, 8}, 16, 1093, true},
  };
  return table;
}

std::optional<std::string> known_name(const SpeciesParams& species, const Design& d) {
  const int order = order_of(d);
  if (order > 63) return std::nullopt;
  const unsigned long long index = binary_index(d);
  for (const auto& n : named_designs()) {
    if (n.species == species && n.order == order && n.index == index) return n.name;
  }
  return std::nullopt;
}

}  // namespace isonemal
