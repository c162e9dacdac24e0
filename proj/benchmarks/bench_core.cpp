#include "antidiag/catalog.hpp"
#include "antidiag/chartab.hpp"
#include "antidiag/classes.hpp"
#include "antidiag/families.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace antidiag;

Group a5() { return make_family({FamilyKind::alternating, {5}, {}}); }
Group sl27() { return make_family({FamilyKind::sl2, {7}, {}}); }
Group a5xa5() { return direct_product(a5(), a5()); }

void BM_Classes(benchmark::State& state, Group (*make)()) {
  const Group g = make();
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(g));
}

void BM_DixonDegrees(benchmark::State& state, Group (*make)()) {
  const Group g = make();
  for (auto _ : state) benchmark::DoNotOptimize(dixon_degrees(g));
}

void BM_CharacterTable(benchmark::State& state, Group (*make)()) {
  const Group g = make();
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
}

void BM_BuildFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl27());
}

}  // namespace

BENCHMARK_CAPTURE(BM_Classes, A5, a5);
BENCHMARK_CAPTURE(BM_Classes, SL27, sl27);
BENCHMARK_CAPTURE(BM_Classes, A5xA5, a5xa5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DixonDegrees, A5, a5);
BENCHMARK_CAPTURE(BM_DixonDegrees, SL27, sl27)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DixonDegrees, A5xA5, a5xa5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharacterTable, A5, a5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharacterTable, SL27, sl27)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildFamily)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
