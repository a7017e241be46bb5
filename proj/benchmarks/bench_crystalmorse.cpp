#include <benchmark/benchmark.h>

#include "crystalmorse/crystal.hpp"
#include "crystalmorse/morse.hpp"
#include "crystalmorse/poset.hpp"
#include "crystalmorse/scan.hpp"

using namespace crystalmorse;

namespace {

void BM_generate_c3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate({Family::C, 3}, {4, 3, 1}).size());
}
BENCHMARK(BM_generate_c3)->Unit(benchmark::kMillisecond);

void BM_mobius_brute_rank13(benchmark::State& state) {
  const auto g = generate({Family::C, 3}, {4, 3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(mobius_brute(Interval(g, 37, 1479)));
}
BENCHMARK(BM_mobius_brute_rank13)->Unit(benchmark::kMicrosecond);

void BM_morse_figure1(benchmark::State& state) {
  const auto g = generate({Family::A, 4}, {3, 1});
  const auto u = *g.find(word_from_tableau(parse_tableau("2,2,4/3")));
  const auto v = *g.find(word_from_tableau(parse_tableau("3,4,5/4")));
  const Interval iv(g, u, v);
  for (auto _ : state) benchmark::DoNotOptimize(morse_mobius(iv).predicted_mobius);
}
BENCHMARK(BM_morse_figure1)->Unit(benchmark::kMicrosecond);

void BM_scan_c3(benchmark::State& state) {
  const auto g = generate({Family::C, 3}, {4, 3, 1});
  ScanConfig cfg;
  cfg.max_interval_rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(g, cfg).stats.intervals);
}
BENCHMARK(BM_scan_c3)->Arg(6)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_cross_check_b2(benchmark::State& state) {
  const auto g = generate({Family::B, 2}, {2, 2});
  ScanConfig cfg;
  cfg.mode = ScanMode::CrossCheck;
  for (auto _ : state) benchmark::DoNotOptimize(scan(g, cfg).stats.certified);
}
BENCHMARK(BM_cross_check_b2)->Unit(benchmark::kMillisecond);

void BM_lattice_check_c2(benchmark::State& state) {
  const auto g = generate({Family::C, 2}, {4, 0});
  for (auto _ : state) benchmark::DoNotOptimize(lattice_check(g).has_value());
}
BENCHMARK(BM_lattice_check_c2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
