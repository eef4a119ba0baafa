#include <benchmark/benchmark.h>

#include <random>

#include "qm/invariants.hpp"
#include "qm/moment.hpp"

using namespace qm;

namespace {

void invariants(benchmark::State& state, bool parallel) {
  auto g = parse_algebra("so(8)");
  auto a = parse_tensor_expr(g, "wedge3(spinor+)"), b = parse_tensor_expr(g, "sym3(spinor+)");
  for (auto _ : state) benchmark::DoNotOptimize(hom_dimension(*g, a, b, {parallel}));
}
void BM_InvariantsSerial(benchmark::State& s) { invariants(s, false); }
void BM_InvariantsParallel(benchmark::State& s) { invariants(s, true); }

std::vector<SparseRow> random_rows(int rows, int cols) {
  std::mt19937_64 rng(7);
  std::vector<SparseRow> out(rows);
  for (auto& r : out) {
    std::vector<int> seen;
    for (int k = 0; k < 6; ++k) {
      int j = static_cast<int>(rng() % cols);
      if (std::find(seen.begin(), seen.end(), j) != seen.end()) continue;
      seen.push_back(j);
      r.push_back({j, Q(static_cast<long>(rng() % 9) - 4)});
    }
    r.erase(std::remove_if(r.begin(), r.end(), [](const auto& e) { return e.second == 0; }), r.end());
  }
  return out;
}

void BM_SparseRankSerial(benchmark::State& state) {
  auto rows = random_rows(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(sparse_rank_serial(rows));
}
void BM_SparseRankParallel(benchmark::State& state) {
  auto rows = random_rows(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(sparse_rank_parallel(rows));
}

void BM_AdMuNilpotency(benchmark::State& state) {
  auto st = make_setting(parse_module_spec("so(8):v1:odd").rep);
  auto mu = moment_map(st);
  for (auto _ : state) benchmark::DoNotOptimize(ad_mu_nilpotency(st, mu));
}

void BM_DynamicalCorrection(benchmark::State& state) {
  auto st = make_setting(parse_module_spec("sp(4):v1:even").rep, 8);
  auto mu = moment_map(st);
  for (auto _ : state) benchmark::DoNotOptimize(dynamical_correction(st, mu));
}

}  // namespace

BENCHMARK(BM_InvariantsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvariantsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseRankSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseRankParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdMuNilpotency)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DynamicalCorrection)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
