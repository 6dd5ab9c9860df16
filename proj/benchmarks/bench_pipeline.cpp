#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "heegaard/conditions.hpp"
#include "heegaard/families.hpp"
#include "heegaard/oracle.hpp"

using namespace heegaard;
using namespace heegaard::testing;

namespace {

// Theta diagram with every multiplicity scaled to roughly `state.range(0)` points per curve.
DTCoordinates scaled(int m) {
  const int e = m - m % 2;
  return coords({{e, 1}, {e + 2, -1}, {e, 3}});
}

void BM_BuildComplex(benchmark::State& state) {
  const auto p = theta_genus2();
  const auto c = scaled(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_complex(p, c).edge_count());
  state.SetItemsProcessed(state.iterations() * c.total_points());
}
BENCHMARK(BM_BuildComplex)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_Analyze(benchmark::State& state) {
  const auto p = theta_genus2();
  const auto c = scaled(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(p, c).faces.faces.size());
  state.SetItemsProcessed(state.iterations() * c.total_points());
}
BENCHMARK(BM_Analyze)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_DoubleRectangleCondition(benchmark::State& state) {
  const auto p = theta_genus2();
  const auto c = coords({{18, -3}, {26, 5}, {24, -13}});
  for (auto _ : state) benchmark::DoNotOptimize(check_double_rectangle_condition(p, c).double_rectangles);
}
BENCHMARK(BM_DoubleRectangleCondition);

void BM_OracleCensus(benchmark::State& state) {
  const auto p = theta_genus2();
  const auto c = scaled(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_census(p, c).b_curves);
}
BENCHMARK(BM_OracleCensus)->Arg(4)->Arg(12)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const auto p = eyeglasses_genus2();
  const SearchBox box{static_cast<int>(state.range(0)), 2};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagrams(p, box).certified);
  state.SetItemsProcessed(state.iterations() * candidate_count(p, box));
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ArcCensus(benchmark::State& state) {
  const auto p = theta_genus2();
  const auto marking = coords({{4, 1}, {2, 0}, {2, -1}});
  const auto cand = scaled(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(connecting_arc_census(p, marking, cand).distinct());
}
BENCHMARK(BM_ArcCensus)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
