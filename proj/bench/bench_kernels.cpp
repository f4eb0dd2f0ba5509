// Serial reference vs OpenMP kernel, same inputs, same outputs.
#include <benchmark/benchmark.h>

#include "gentor/alexander.hpp"
#include "gentor/gentorsion.hpp"
#include "gentor/grid.hpp"

using namespace gentor;

namespace {

const std::vector<long> kPunctures{6, 8, 10, 12};

void certificate_grid_serial_bm(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(certificate_grid_serial(kPunctures, 3, 40));
}
void certificate_grid_parallel_bm(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(certificate_grid(kPunctures, 3, 40));
}

void kn_grid_serial_bm(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(kn_grid_serial(2, 5, 60, 2));
}
void kn_grid_parallel_bm(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(kn_grid(2, 5, 60, 2));
}

const GroupPresentation& k2_two_bridge() {
  static const GroupPresentation p = wirtinger(two_bridge_diagram(TangleWord(kK2ConwayWord)));
  return p;
}
void alexander_serial_bm(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(alexander_polynomial_serial(k2_two_bridge()));
}
void alexander_parallel_bm(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(alexander_polynomial(k2_two_bridge()));
}

const GroupPresentation& u132() {
  static const GroupPresentation p = universal_presentation(1, Slope{3, 2});
  return p;
}
void search_serial_bm(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(search_certificate_serial(u132(), Word::generator(0), {3, 3}));
}
void search_parallel_bm(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(search_certificate(u132(), Word::generator(0), {3, 3}));
}

}  // namespace

BENCHMARK(certificate_grid_serial_bm)->Unit(benchmark::kMillisecond);
BENCHMARK(certificate_grid_parallel_bm)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(kn_grid_serial_bm)->Unit(benchmark::kMillisecond);
BENCHMARK(kn_grid_parallel_bm)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(alexander_serial_bm)->Unit(benchmark::kMillisecond);
BENCHMARK(alexander_parallel_bm)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(search_serial_bm)->Unit(benchmark::kMillisecond);
BENCHMARK(search_parallel_bm)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
