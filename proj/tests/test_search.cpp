#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "ghd/grid_io.hpp"
#include "ghd/latin.hpp"
#include "ghd/latin_io.hpp"
#include "ghd/search.hpp"
#include "ghd/starter.hpp"
#include "oracle.hpp"

using namespace ghd;
using namespace ghd::search;

namespace {

SearchBudget threads(int n, unsigned seed = 0) {
  SearchBudget b;
  b.threads = n;
  b.seed_order = seed;
  return b;
}

// Points the cache at a fresh directory for the lifetime of the object.
class ScopedCache {
 public:
  explicit ScopedCache(const std::string& name)
      : dir_(std::filesystem::temp_directory_path() / ("ghd-test-" + name + "-" + std::to_string(::getpid()))) {
    std::filesystem::remove_all(dir_);
    const char* old = std::getenv("GHD_CACHE_DIR");
    if (old) old_ = old;
    ::setenv("GHD_CACHE_DIR", dir_.c_str(), 1);
  }
  ~ScopedCache() {
    std::filesystem::remove_all(dir_);
    if (old_.empty()) ::unsetenv("GHD_CACHE_DIR");
    else ::setenv("GHD_CACHE_DIR", old_.c_str(), 1);
  }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string old_;
};

}  // namespace

TEST(Transitive, TrivialStarter) {
  auto r = search_transitive_starter(1, 0);
  ASSERT_EQ(r.status, Status::Found);
  EXPECT_TRUE(starter::validate(*r.witness).ok());
  EXPECT_EQ(starter::expand(*r.witness).side(), 1);
}

TEST(Transitive, EightTwo) {
  auto r = search_transitive_starter(8, 2);
  ASSERT_EQ(r.status, Status::Found);
  const auto& sa = *r.witness;
  EXPECT_TRUE(starter::validate(sa).ok());
  EXPECT_TRUE(oracle::starter_differences_distinct(sa));
  auto g = starter::expand(sa);
  EXPECT_EQ(g.side(), 10);
  EXPECT_EQ(g.v(), 24);
  EXPECT_TRUE(oracle::is_ghd(g));
  EXPECT_TRUE(oracle::pairwise_hole(g, starter::infinite_symbols(sa)));
}

// No DRNKTS(12): the starter search and the exhaustive search agree.
TEST(Transitive, FourOneCrossChecked) {
  EXPECT_EQ(search_transitive_starter(4, 1).status, Status::ProvenEmpty);
  EXPECT_EQ(exhaustive_ghd(5, 12).existence, Existence::Empty);
}

TEST(Transitive, ElevenOne) {
  auto r = search_transitive_starter(11, 1);
  ASSERT_EQ(r.status, Status::Found);
  EXPECT_TRUE(oracle::is_ghd(starter::expand(*r.witness)));
}

TEST(Transitive, NodeLimit) {
  SearchBudget b;
  b.node_limit = 50;
  EXPECT_EQ(search_transitive_starter(9, 1, b).status, Status::BudgetExhausted);
}

TEST(Transitive, WallLimit) {
  SearchBudget b;
  b.wall_limit = 0.2;
  auto t0 = std::chrono::steady_clock::now();
  EXPECT_EQ(search_transitive_starter(9, 1, b).status, Status::BudgetExhausted);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 5.0);
}

TEST(Intransitive, SevenTwo) {
  auto r = search_intransitive_starter(7, 2);
  ASSERT_EQ(r.status, Status::Found);
  EXPECT_TRUE(starter::validate(*r.witness).ok());
  EXPECT_TRUE(oracle::intransitive_differences_distinct(*r.witness));
  auto g = starter::expand(*r.witness);
  EXPECT_EQ(g.side(), 9);
  EXPECT_TRUE(oracle::is_ghd(g));
}

TEST(Intransitive, TwoZeroEmpty) { EXPECT_EQ(search_intransitive_starter(2, 0).status, Status::ProvenEmpty); }

TEST(Intransitive, TenOne) {
  auto r = search_intransitive_starter(10, 1);
  ASSERT_EQ(r.status, Status::Found);
  auto g = starter::expand(*r.witness);
  EXPECT_EQ(g.side(), 11);
  EXPECT_EQ(g.v(), 30);
  EXPECT_TRUE(oracle::is_ghd(g));
}

TEST(Imols, SevenOneFoundAndCached) {
  ScopedCache cache("seven");
  auto r = search_imols(7, 1);
  ASSERT_EQ(r.status, Status::Found);
  EXPECT_TRUE(oracle::is_imols(*r.witness));
  EXPECT_TRUE(std::filesystem::exists(cache.dir() / "imols_7_1_3.json"));
  auto again = search_imols(7, 1);
  ASSERT_EQ(again.status, Status::Found);
  ASSERT_FALSE(again.transcript.empty());
  EXPECT_EQ(again.transcript.front(), "cache");
  EXPECT_EQ(again.witness->squares, r.witness->squares);
}

TEST(Imols, CorruptCacheIgnored) {
  ScopedCache cache("corrupt");
  auto seven = search_imols(7, 1);
  ASSERT_EQ(seven.status, Status::Found);
  auto file = cache.dir() / "imols_8_1_3.json";
  write_file(file, "{not json");
  auto r = search_imols(8, 1);
  ASSERT_EQ(r.status, Status::Found);
  EXPECT_NE(r.transcript.front(), "cache");
  EXPECT_TRUE(oracle::is_imols(*r.witness));
  // A valid file of the wrong order is not accepted either.
  write_file(file, latin::to_json(*seven.witness).dump());
  auto again = search_imols(8, 1);
  ASSERT_EQ(again.status, Status::Found);
  EXPECT_NE(again.transcript.front(), "cache");
  EXPECT_EQ(again.witness->order, 8);
}

TEST(Imols, SixOneEmpty) {
  ScopedCache cache("six");
  EXPECT_EQ(search_imols(6, 1).status, Status::ProvenEmpty);
  EXPECT_EQ(search_imols_general(6, 1, 2).status, Status::ProvenEmpty);
  EXPECT_EQ(search_imols_general(6, 1, 1).status, Status::Found);
}

// Two MOLS(6) do not exist.
TEST(Imols, NoPairOfOrderSix) { EXPECT_EQ(search_imols_general(6, 0, 2).status, Status::ProvenEmpty); }

TEST(Imols, FieldDelegation) {
  auto r = search_imols(8, 0);
  ASSERT_EQ(r.status, Status::Found);
  EXPECT_EQ(r.nodes, 0);
  auto field = latin::as_imols(latin::mols_from_field(8, 3));
  EXPECT_EQ(r.witness->squares, field.squares);
}

TEST(Imols, GeneralAgreesWithCyclic) {
  auto c = search_imols_cyclic(7, 1, 3);
  auto g = search_imols_general(7, 1, 3);
  ASSERT_EQ(c.status, Status::Found);
  ASSERT_EQ(g.status, Status::Found);
  EXPECT_TRUE(oracle::is_imols(*c.witness));
  EXPECT_TRUE(oracle::is_imols(*g.witness));
  EXPECT_EQ(search_imols_general(4, 0, 4).status, Status::ProvenEmpty);
  EXPECT_EQ(search_imols_general(5, 0, 5).status, Status::ProvenEmpty);
}

TEST(Imols, GeneralHonoursWallLimit) {
  SearchBudget b;
  b.wall_limit = 0.5;
  auto t0 = std::chrono::steady_clock::now();
  auto r = search_imols_general(10, 2, 3, b);
  EXPECT_NE(r.status, Status::ProvenEmpty);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 10.0);
}

TEST(Exhaustive, SmallCases) {
  EXPECT_EQ(exhaustive_ghd(1, 3).existence, Existence::Exists);
  EXPECT_EQ(exhaustive_ghd(2, 6).existence, Existence::Empty);
  EXPECT_EQ(exhaustive_ghd(3, 9).existence, Existence::Empty);
  EXPECT_EQ(exhaustive_ghd(3, 0).existence, Existence::Exists);
  EXPECT_EQ(exhaustive_ghd(4, 10).existence, Existence::Empty);  // v not a multiple of 3
  EXPECT_EQ(exhaustive_ghd(3, 12).existence, Existence::Empty);  // v/3 > s
  EXPECT_EQ(exhaustive_ghd(5, 9).existence, Existence::Empty);   // 2s > v - 1
}

TEST(Exhaustive, WitnessesVerify) {
  for (auto [s, v] : {std::pair{1, 3}, {4, 12}, {5, 15}}) {
    auto r = exhaustive_ghd(s, v);
    ASSERT_EQ(r.existence, Existence::Exists) << s << "," << v;
    EXPECT_EQ(r.witness->side(), s);
    EXPECT_EQ(r.witness->v(), v);
    EXPECT_TRUE(oracle::is_ghd(*r.witness));
  }
}

TEST(Exhaustive, OutOfRange) {
  EXPECT_EQ(exhaustive_ghd(6, 15).existence, Existence::Unknown);
  EXPECT_EQ(exhaustive_ghd(7, 15).existence, Existence::Unknown);
}

// Tasks below the winning index always run to completion, so results do not
// depend on the thread count.
TEST(Determinism, ThreadCounts) {
  auto base = search_transitive_starter(7, 1, threads(1));
  ASSERT_EQ(base.status, Status::ProvenEmpty);
  for (int t : {2, 4, 8}) {
    auto r = search_transitive_starter(7, 1, threads(t));
    EXPECT_EQ(r.status, base.status);
    EXPECT_EQ(r.nodes, base.nodes);
    EXPECT_EQ(r.transcript, base.transcript);
  }
  auto f1 = search_intransitive_starter(7, 2, threads(1));
  for (int t : {2, 4}) {
    auto r = search_intransitive_starter(7, 2, threads(t));
    ASSERT_EQ(r.status, Status::Found);
    EXPECT_EQ(starter::format(*r.witness), starter::format(*f1.witness));
    EXPECT_EQ(r.transcript, f1.transcript);
  }
  auto e1 = exhaustive_ghd(5, 12, threads(1));
  auto e4 = exhaustive_ghd(5, 12, threads(4));
  EXPECT_EQ(e1.nodes, e4.nodes);
  EXPECT_EQ(e1.transcript, e4.transcript);
}

TEST(Determinism, SeedOrder) {
  auto a = search_transitive_starter(8, 2, threads(3, 17));
  auto b = search_transitive_starter(8, 2, threads(1, 17));
  ASSERT_EQ(a.status, Status::Found);
  EXPECT_EQ(starter::format(*a.witness), starter::format(*b.witness));
  EXPECT_EQ(a.transcript, b.transcript);
  for (unsigned seed : {1u, 2u, 99u}) {
    auto r = search_transitive_starter(8, 2, threads(2, seed));
    ASSERT_EQ(r.status, Status::Found) << seed;
    EXPECT_TRUE(oracle::is_ghd(starter::expand(*r.witness)));
  }
  EXPECT_EQ(search_transitive_starter(7, 1, threads(2, 5)).status, Status::ProvenEmpty);
}

TEST(Transcript, Capped) {
  auto r = search_transitive_starter(7, 1);
  EXPECT_LE(r.transcript.size(), 1000u);
  EXPECT_EQ(r.transcript.size(), 1000u);
}
