#include "circuitlab/circuits.hpp"
#include "circuitlab/families.hpp"
#include "circuitlab/fstab.hpp"
#include "circuitlab/walk.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace circuitlab;

static void BM_IsCircuitPermatch10(benchmark::State &state) {
  const HPolytope p = build_perfect_matching_polytope(10);
  const auto v = vertex_vectors(EdgeIndex(10), enumerate_perfect_matchings(10));
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    const auto &x = v[rng() % v.size()];
    const auto &y = v[rng() % v.size()];
    if (x != y)
      benchmark::DoNotOptimize(is_circuit(p, subtract(y, x)));
  }
}
BENCHMARK(BM_IsCircuitPermatch10);

static void BM_IsCircuitTsp7(benchmark::State &state) {
  const HPolytope p = build_tsp_polytope(7, true);
  std::vector<EdgeSet> sets;
  for (const auto &t : enumerate_tours(7))
    sets.push_back(tour_edges(t));
  const auto v = vertex_vectors(EdgeIndex(7), sets);
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    const auto &x = v[rng() % v.size()];
    const auto &y = v[rng() % v.size()];
    if (x != y)
      benchmark::DoNotOptimize(is_circuit(p, subtract(y, x)));
  }
}
BENCHMARK(BM_IsCircuitTsp7);

static void BM_EnumerateCircuits(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const HPolytope p = build_matching_polytope(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_circuits(p).size());
}
BENCHMARK(BM_EnumerateCircuits)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_DiameterMatching4(benchmark::State &state) {
  const HPolytope p = build_matching_polytope(4);
  const auto v = vertex_vectors(EdgeIndex(4), enumerate_matchings(4));
  const auto cs = enumerate_circuits(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(circuit_diameter(p, v, cs).diameter);
}
BENCHMARK(BM_DiameterMatching4)->Unit(benchmark::kMillisecond);

static void BM_MatchingRecipe7(benchmark::State &state) {
  const EdgeIndex idx(7);
  const HPolytope p = build_matching_polytope(7);
  const auto ms = enumerate_matchings(7);
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    const auto &a = ms[rng() % ms.size()];
    const auto &b = ms[rng() % ms.size()];
    benchmark::DoNotOptimize(matching_two_step_recipe(p, idx, a, b).length());
  }
}
BENCHMARK(BM_MatchingRecipe7);

static void BM_FstabWalkC7(benchmark::State &state) {
  const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}});
  const auto v = enumerate_fstab_vertices(g);
  std::mt19937_64 rng(4);
  for (auto _ : state) {
    const auto &x = v[rng() % v.size()];
    const auto &y = v[rng() % v.size()];
    benchmark::DoNotOptimize(fstab_walk(g, x, y, 0).walk.length());
  }
}
BENCHMARK(BM_FstabWalkC7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
