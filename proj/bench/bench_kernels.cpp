#include <benchmark/benchmark.h>

#include <vector>

#include "assoc/flipgraph.hpp"
#include "assoc/kernels.hpp"
#include "assoc/rng.hpp"

using namespace assoc;

namespace {

const Graph& flip_graph(int n) {
  static std::vector<Graph> cache(kHardMaxN + 1);
  if (cache[n].vertex_count() == 0) cache[n] = build_associahedron(n).graph();
  return cache[n];
}

std::vector<double> random_vector(std::size_t n) {
  Rng rng(1);
  std::vector<double> x(n);
  for (double& v : x) v = rng.symmetric();
  return x;
}

template <bool Parallel>
void BM_Matvec(benchmark::State& state) {
  const Graph& g = flip_graph(static_cast<int>(state.range(0)));
  const auto x = random_vector(g.vertex_count());
  std::vector<double> y(g.vertex_count());
  for (auto _ : state) {
    if constexpr (Parallel) kernels::adjacency_matvec(g, x, y);
    else kernels::serial::adjacency_matvec(g, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * g.targets().size());
}

template <bool Parallel>
void BM_Dot(benchmark::State& state) {
  const auto a = random_vector(static_cast<std::size_t>(state.range(0)));
  const auto b = random_vector(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    double d = Parallel ? kernels::dot(a, b) : kernels::serial::dot(a, b);
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_EdgeSquares(benchmark::State& state) {
  const Graph& g = flip_graph(static_cast<int>(state.range(0)));
  const auto x = random_vector(g.vertex_count());
  for (auto _ : state) {
    double s = Parallel ? kernels::edge_square_sum(g, x, -1) : kernels::serial::edge_square_sum(g, x, -1);
    benchmark::DoNotOptimize(s);
  }
}

template <bool Parallel>
void BM_BuildFlipGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Associahedron a = Parallel ? build_associahedron(n) : build_associahedron_serial(n);
    benchmark::DoNotOptimize(a.graph().edge_count());
  }
}

}  // namespace

BENCHMARK(BM_Matvec<false>)->Name("matvec/serial")->DenseRange(10, 13);
BENCHMARK(BM_Matvec<true>)->Name("matvec/omp")->DenseRange(10, 13);
BENCHMARK(BM_Dot<false>)->Name("dot/serial")->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Dot<true>)->Name("dot/omp")->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_EdgeSquares<false>)->Name("edge_squares/serial")->DenseRange(10, 13);
BENCHMARK(BM_EdgeSquares<true>)->Name("edge_squares/omp")->DenseRange(10, 13);
BENCHMARK(BM_BuildFlipGraph<false>)->Name("build/serial")->DenseRange(9, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildFlipGraph<true>)->Name("build/omp")->DenseRange(9, 12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
