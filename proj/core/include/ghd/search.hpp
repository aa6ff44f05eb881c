#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ghd/design.hpp"
#include "ghd/latin.hpp"
#include "ghd/starter.hpp"

namespace ghd::search {

// The root's branches are independent tasks; node_limit applies to each task
// so results do not depend on scheduling.
struct SearchBudget {
  long long node_limit = 50'000'000;
  double wall_limit = 60.0;  // seconds, whole search
  int threads = 0;           // 0: hardware concurrency
  unsigned seed_order = 0;   // 0: natural branch order, otherwise a fixed shuffle of the root branches
};

enum class Status { Found, ProvenEmpty, BudgetExhausted };

std::string_view to_string(Status s);

template <class T>
struct SearchResult {
  Status status = Status::BudgetExhausted;
  std::optional<T> witness;
  long long nodes = 0;
  std::vector<std::string> transcript;  // first visited nodes, at most 1000
};

SearchResult<starter::TransitiveStarterAdder> search_transitive_starter(int n, int x, const SearchBudget& budget = {});
SearchResult<starter::IntransitiveStarterAdder> search_intransitive_starter(int n, int x,
                                                                            const SearchBudget& budget = {});

// Cyclic search over Z_{y-a} first, then plain backtracking. Results are read
// from and written to the cache directory.
SearchResult<latin::ImolsSet> search_imols(int y, int a, int t = 3, const SearchBudget& budget = {});
// Only the general backtracking search, no cache.
SearchResult<latin::ImolsSet> search_imols_general(int y, int a, int t, const SearchBudget& budget = {});
SearchResult<latin::ImolsSet> search_imols_cyclic(int y, int a, int t, const SearchBudget& budget = {});

// GHD_CACHE_DIR, else a directory under the system temp path.
std::filesystem::path cache_dir();

enum class Existence { Exists, Empty, Unknown };
std::string_view to_string(Existence e);

struct ExhaustiveResult {
  Existence existence = Existence::Unknown;
  std::optional<GhdArray> witness;
  long long nodes = 0;
  std::vector<std::string> transcript;
};

// Settles existence of GHD(s, v) for s <= 6 by exhausting a symmetry-reduced
// tree: row 0 is {0,1,2},{3,4,5},.. then empties, and symbol 0 sits at (r,r).
// (6,15) runs only with allow_long.
ExhaustiveResult exhaustive_ghd(int s, int v, const SearchBudget& budget = {}, bool allow_long = false);

}  // namespace ghd::search
