#include <benchmark/benchmark.h>

#include <filesystem>

#include "ghd/catalog.hpp"
#include "ghd/convert.hpp"
#include "ghd/grid_io.hpp"
#include "ghd/latin.hpp"
#include "ghd/search.hpp"
#include "ghd/starter.hpp"
#include "ghd/verify.hpp"

using namespace ghd;

namespace {

const std::filesystem::path kData = std::filesystem::path(GHD_SOURCE_DIR) / "data";

starter::TransitiveStarterAdder load_transitive(const char* file) {
  return std::get<starter::TransitiveStarterAdder>(starter::parse(read_file(kData / file)));
}

void BM_Expand(benchmark::State& state) {
  auto sa = load_transitive("appA_t_n44.sa");
  for (auto _ : state) benchmark::DoNotOptimize(starter::expand(sa));
}
BENCHMARK(BM_Expand);

void BM_VerifyGhd(benchmark::State& state) {
  auto g = starter::expand(load_transitive("appA_t_n44.sa"));
  for (auto _ : state) benchmark::DoNotOptimize(verify_ghd(g));
}
BENCHMARK(BM_VerifyGhd);

void BM_VerifyProduct(benchmark::State& state) {
  auto g = latin::ghd_mols_product(load_grid(kData / "ex1_1.grid"), latin::mols_from_field(4, 3));
  for (auto _ : state) benchmark::DoNotOptimize(verify_ghd(g));
}
BENCHMARK(BM_VerifyProduct);

void BM_DcwDistance(benchmark::State& state) {
  auto code = to_dcw_code(starter::expand(load_transitive("appB_t_n20.sa")));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(code));
}
BENCHMARK(BM_DcwDistance);

void BM_LoadCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(catalog::load_catalog(kData));
}
BENCHMARK(BM_LoadCatalog)->Unit(benchmark::kMillisecond);

void BM_SearchImolsCyclic(benchmark::State& state) {
  search::SearchBudget b;
  b.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search::search_imols_cyclic(9, 2, 3, b));
}
BENCHMARK(BM_SearchImolsCyclic)->Unit(benchmark::kMillisecond);

void BM_SearchTransitive(benchmark::State& state) {
  search::SearchBudget b;
  b.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search::search_transitive_starter(7, 1, b));
}
BENCHMARK(BM_SearchTransitive)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
