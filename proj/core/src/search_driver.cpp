#include <cstdlib>

#include "ghd/search.hpp"

namespace ghd::search {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Found: return "Found";
    case Status::ProvenEmpty: return "ProvenEmpty";
    case Status::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

std::string_view to_string(Existence e) {
  switch (e) {
    case Existence::Exists: return "Exists";
    case Existence::Empty: return "Empty";
    case Existence::Unknown: return "Unknown";
  }
  return "?";
}

std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("GHD_CACHE_DIR"); env && *env) return env;
  return std::filesystem::temp_directory_path() / "ghd-cache";
}

}  // namespace ghd::search
