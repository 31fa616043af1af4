#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "isonemal/enumeration.hpp"
#include "isonemal/species.hpp"

namespace isonemal {

struct CatalogFamily {
  SpeciesParams params;
  FamilyStats stats;
  std::vector<CatalogEntry> entries;
  /// Set when the family could not be enumerated, e.g. the cap was exceeded.
  std::optional<std::string> error;
  bool cap_exceeded = false;
};

struct CatalogOptions {
  EquivalencePolicy policy{};
  bool include_falling_apart = false;
  std::uint64_t cap = std::uint64_t{1} << 24;
};

struct Catalog {
  int order = 0;
  EquivalencePolicy policy{};
  bool include_falling_apart = false;
  /// In candidate order: species tag, then length, then width.
  std::vector<CatalogFamily> families;
  /// Designs reached from more than one family, and similar anomalies.
  std::vector<std::string> diagnostics;

  std::size_t size() const;
  bool any_cap_exceeded() const;
};

/// All designs of order N from every candidate family. Throws
/// std::out_of_range for N <= 4.
Catalog catalog(int N, const CatalogOptions& options = {});

/// The prefabrics of order N in species 3, 6 and 9 that fall apart.
Catalog falls_apart_list(int N, const CatalogOptions& options = {});

/// `N-<hash>-<seq>` where the hash is taken from the canonical key.
std::string entry_id(int N, const std::string& key, int seq);

/// Tab-separated table with a header row:
/// id, species, ell, w, order, genus, isonemal, hangs, twill.
std::string summary_tsv(const Catalog& c);

/// Writes one design file per entry, named by id, and summary.tsv.
void write_catalog(const Catalog& c, const std::filesystem::path& dir);

/// Published reference of a design, such as "12-183-1", when it is one of the
/// few named ones; falls-apart names carry a trailing '*'.
std::optional<std::string> known_name(const SpeciesParams& species, const Design& d);

struct NamedDesign {
  std::string name;
  SpeciesParams species;
  int order;
  unsigned long long index;
  bool falls_apart;
};

const std::vector<NamedDesign>& named_designs();

}  // namespace isonemal
