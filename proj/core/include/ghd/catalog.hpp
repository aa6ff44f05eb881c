#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ghd/design.hpp"
#include "ghd/starter.hpp"
#include "ghd/verify.hpp"

namespace ghd::catalog {

enum class EntryKind { Transitive, Intransitive, Modified, Grid };
std::string_view to_string(EntryKind k);

struct Expected {
  int s = 0;
  int v = 0;
  std::optional<bool> star;
  std::optional<int> subsquare_e;
};

// A printed cell that disagrees with the construction it illustrates.
struct Erratum {
  int row = 0;
  int col = 0;
  std::string cell;  // labels separated by spaces, empty for an empty cell
};

enum class EntryStatus { Verified, Quarantined };

using Payload = std::variant<starter::TransitiveStarterAdder, starter::IntransitiveStarterAdder, GhdArray>;

struct CatalogEntry {
  std::string id;
  EntryKind kind = EntryKind::Grid;
  std::filesystem::path file;
  Expected expected;
  std::optional<std::string> source;  // starter this grid was printed from
  std::vector<Erratum> errata;
  Payload payload;

  std::optional<GhdArray> design;
  std::vector<SymbolId> hole;        // the star hole, when one was checked
  std::optional<Subsquare> subsquare;
  EntryStatus status = EntryStatus::Quarantined;
  std::vector<std::string> diagnostics;

  bool verified() const { return status == EntryStatus::Verified; }
};

struct Catalog {
  std::filesystem::path dir;
  std::vector<CatalogEntry> entries;

  const CatalogEntry* find(std::string_view id) const;
  const CatalogEntry& at(std::string_view id) const;  // MissingIngredient if absent
  int verified_count() const;
  int quarantined_count() const;
};

// GHD_DATA_DIR, else the source-tree data directory.
std::filesystem::path data_dir();

// Parses every manifest entry and verifies it against its expectations.
// ParseError for unreadable files; failed checks quarantine the entry.
Catalog load_catalog();
Catalog load_catalog(const std::filesystem::path& dir);

// Cells where the two grids disagree, compared through labels.
std::vector<std::pair<int, int>> differing_cells(const GhdArray& a, const GhdArray& b);

// The grid with each erratum's cell replaced.
GhdArray apply_errata(const GhdArray& g, const std::vector<Erratum>& errata);

}  // namespace ghd::catalog
