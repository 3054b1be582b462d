#include <benchmark/benchmark.h>

#include "robustmine/mining.hpp"
#include "robustmine/ordering.hpp"
#include "robustmine/random.hpp"
#include "robustmine/robustness.hpp"

namespace {

using namespace robustmine;

TransactionDatabase synthetic(std::size_t items, std::size_t rows, double density, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<std::vector<Item>> data(rows);
  for (auto& row : data) {
    for (std::size_t i = 0; i < items; ++i) {
      if (rng.uniform() < density) row.push_back(static_cast<Item>(i));
    }
  }
  return TransactionDatabase(items, data);
}

void BM_CellTable(benchmark::State& state) {
  const auto db = synthetic(64, 10000, 0.3, 1);
  std::vector<Item> items;
  for (Item i = 0; i < static_cast<Item>(state.range(0)); ++i) items.push_back(i * 3);
  const Itemset x(items);
  for (auto _ : state) benchmark::DoNotOptimize(cell_table(db, x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(db.size()));
}
BENCHMARK(BM_CellTable)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

void BM_Expand(benchmark::State& state) {
  const std::size_t width = static_cast<std::size_t>(state.range(0));
  std::vector<Count> cells(std::size_t{1} << width);
  Count total = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) total += (cells[i] = 1 + i % 7);
  for (auto _ : state) benchmark::DoNotOptimize(expand(cells, total));
}
BENCHMARK(BM_Expand)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_MineRobust(benchmark::State& state) {
  const auto db = synthetic(24, 2000, 0.25, 2);
  MiningConfig config;
  config.kind = static_cast<PredicateKind>(state.range(0));
  config.alpha = Alpha(0.9);
  config.rho = 0.5;
  config.min_support = 40;
  for (auto _ : state) benchmark::DoNotOptimize(mine_robust(db, config));
}
BENCHMARK(BM_MineRobust)
    ->Arg(static_cast<int>(PredicateKind::Free))
    ->Arg(static_cast<int>(PredicateKind::NonDerivable))
    ->Arg(static_cast<int>(PredicateKind::TotallyShattered))
    ->Unit(benchmark::kMillisecond);

void BM_MineClosed(benchmark::State& state) {
  const auto db = synthetic(30, 3000, 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mine_closed(db, static_cast<Count>(state.range(0))));
}
BENCHMARK(BM_MineClosed)->Arg(300)->Arg(100)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ClosedCoefficients(benchmark::State& state) {
  const auto db = synthetic(16, 400, 0.4, 4);
  const ClosedFamily family = closed_family(db, 1);
  const ClosedItemset& target = family.members[family.members.size() / 2];
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_coefficients(target.itemset, family.members, target.support, db.num_items()));
  }
  state.counters["family"] = static_cast<double>(family.members.size());
}
BENCHMARK(BM_ClosedCoefficients)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
