#include <random>

#include <benchmark/benchmark.h>

#include "semitop/constructions.hpp"
#include "semitop/group_completion.hpp"
#include "semitop/homology.hpp"
#include "semitop/smith.hpp"
#include "semitop/theorem_checks.hpp"

using namespace semitop;

namespace {

  SparseMatrix random_sparse(std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64                        rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int>     value(-9, 9);
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
    for (auto& row : a) {
      for (auto& x : row) {
        if (coin(rng) < density) {
          x = value(rng);
        }
      }
    }
    return SparseMatrix::from_dense(a);
  }

  void BM_SparseSmith(benchmark::State& state) {
    auto const a = random_sparse(static_cast<std::size_t>(state.range(0)), 0.1, 1);
    for (auto _ : state) {
      benchmark::DoNotOptimize(smith_normal_form(a));
    }
  }
  // Random full-rank input: the last invariant factor is |det|, so cost is
  // dominated by big-integer growth past n = 100.
  BENCHMARK(BM_SparseSmith)->Arg(30)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);

  void BM_DenseSmithWithTransforms(benchmark::State& state) {
    auto const a = to_big(random_sparse(static_cast<std::size_t>(state.range(0)), 0.3, 2));
    for (auto _ : state) {
      benchmark::DoNotOptimize(smith_normal_form(a, true));
    }
  }
  BENCHMARK(BM_DenseSmithWithTransforms)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

  void BM_BarComplexMoore(benchmark::State& state) {
    auto const m = moore_semigroup(2).m;
    for (auto _ : state) {
      benchmark::DoNotOptimize(bar_complex(m, static_cast<std::size_t>(state.range(0))));
    }
  }
  BENCHMARK(BM_BarComplexMoore)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

  void BM_HomologyMoore(benchmark::State& state) {
    auto const m = moore_semigroup(2).m;
    for (auto _ : state) {
      benchmark::DoNotOptimize(homology_profile(m, 4));
    }
  }
  BENCHMARK(BM_HomologyMoore)->Unit(benchmark::kMillisecond);

  void BM_HomologySphereWedge(benchmark::State& state) {
    auto const rb1 = adjoin_identity(rectangular_band(2, 2));
    auto const w   = wedge_monoid(rb1, rb1).monoid;
    for (auto _ : state) {
      benchmark::DoNotOptimize(homology_profile(w, 3));
    }
  }
  BENCHMARK(BM_HomologySphereWedge)->Unit(benchmark::kMillisecond);

  void BM_GroupCompletionCyclic(benchmark::State& state) {
    auto const c = cyclic_group(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(group_completion(c));
    }
  }
  BENCHMARK(BM_GroupCompletionCyclic)->Arg(12)->Arg(48);

  void BM_MooreSuite(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_moore(static_cast<std::uint32_t>(state.range(0))));
    }
  }
  BENCHMARK(BM_MooreSuite)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
