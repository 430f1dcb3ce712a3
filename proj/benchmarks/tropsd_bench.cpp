#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tropsd/factor.hpp"
#include "tropsd/newton_subdiv.hpp"
#include "tropsd/psd_cone.hpp"
#include "tropsd/puiseux.hpp"
#include "tropsd/trop_core.hpp"

namespace {

using namespace tropsd;

Rat draw(std::mt19937_64& rng) {
  static const std::vector<Rat> grid{Rat(-2), Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1), Rat(2)};
  return grid[rng() % grid.size()];
}

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = draw(rng);
  }
  return a;
}

// min of shifted rank-one matrices, always tropical PSD
SymMatrix random_member(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SymMatrix a;
  for (std::size_t k = 0; k < n + 2; ++k) {
    Vector u(n);
    for (auto& x : u) x = draw(rng);
    const SymMatrix term = rank_one_from_vector(u);
    if (k == 0) {
      a = term;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) a(i, j) = std::min(a(i, j), term(i, j));
    }
  }
  return a;
}

void BM_TropDetBruteForce(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(trop_det_bruteforce(a));
}
BENCHMARK(BM_TropDetBruteForce)->DenseRange(4, 8, 2);

void BM_TropDetAssignment(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(trop_det_assignment(a));
}
BENCHMARK(BM_TropDetAssignment)->DenseRange(4, 8, 2)->Arg(32)->Arg(64);

void BM_UpperFacets(benchmark::State& state) {
  const SymMatrix a = random_member(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(upper_facets(a));
}
BENCHMARK(BM_UpperFacets)->DenseRange(3, 7);

void BM_BarvinokRank(benchmark::State& state) {
  const SymMatrix a = random_member(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_barvinok_rank(a));
}
BENCHMARK(BM_BarvinokRank)->DenseRange(3, 6);

void BM_PrincipalMinors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PuiseuxMatrix w = construct_witness(random_member(n, 4), SignPattern::all_positive(n));
  for (auto _ : state) benchmark::DoNotOptimize(principal_minors(w));
}
BENCHMARK(BM_PrincipalMinors)->DenseRange(3, 7);

}  // namespace

BENCHMARK_MAIN();
