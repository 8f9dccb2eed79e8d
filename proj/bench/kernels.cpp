// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick one.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "rainbow/fixtures.hpp"
#include "rainbow/latin.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

namespace {

void BM_ReducedSquares_Serial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_reduced_latin_squares_serial(m));
}

void BM_ReducedSquares_OpenMP(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_reduced_latin_squares(m));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_PermanentSum_Serial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signed_permanent_sum_serial(m));
}

void BM_PermanentSum_OpenMP(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signed_permanent_sum(m));
  state.counters["threads"] = omp_get_max_threads();
}

ColoredMultigraph same_center(int n) {
  const std::vector<Vertex> centers(static_cast<std::size_t>(n - 1), 0);
  return make_star_graph(n, centers);
}

void BM_StarSearch_Serial(benchmark::State& state) {
  const auto g = same_center(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(search_decompositions_serial(g, {Shape::star, SearchMode::count, std::nullopt}).count);
}

void BM_StarSearch_OpenMP(benchmark::State& state) {
  const auto g = same_center(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(search_decompositions(g, {Shape::star, SearchMode::count, std::nullopt}).count);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_TreeSearch_Serial(benchmark::State& state) {
  const auto g = FixtureCatalog::bundled().at("two_centers_n5").graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(search_decompositions_serial(g, {Shape::tree, SearchMode::count, std::nullopt}).count);
}

void BM_TreeSearch_OpenMP(benchmark::State& state) {
  const auto g = FixtureCatalog::bundled().at("two_centers_n5").graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(search_decompositions(g, {Shape::tree, SearchMode::count, std::nullopt}).count);
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_ReducedSquares_Serial)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReducedSquares_OpenMP)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermanentSum_Serial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermanentSum_OpenMP)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarSearch_Serial)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarSearch_OpenMP)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeSearch_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeSearch_OpenMP)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
