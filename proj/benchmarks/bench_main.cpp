#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "semibound/corpus.hpp"
#include "semibound/green.hpp"
#include "semibound/lattice.hpp"
#include "semibound/pipeline.hpp"
#include "semibound/semigroup.hpp"

namespace {

  using namespace semibound;

  // Corpus entries by position: 0 sign, 1 brandt_b2, 2 sym3_standard,
  // 4 sym4_standard.
  std::vector<QMatrix> const& generators_of(std::int64_t i) {
    return corpus()[static_cast<std::size_t>(i)].generators;
  }

  void bm_closure(benchmark::State& state) {
    auto const& gens = generators_of(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(closure(gens));
    }
    state.SetLabel(corpus()[static_cast<std::size_t>(state.range(0))].name);
  }
  BENCHMARK(bm_closure)->Arg(1)->Arg(2)->Arg(4);

  void bm_green(benchmark::State& state) {
    auto const s = adjoin_zero(closure(generators_of(state.range(0))));
    for (auto _ : state) {
      benchmark::DoNotOptimize(green_relations(s));
    }
    state.SetLabel(corpus()[static_cast<std::size_t>(state.range(0))].name);
  }
  BENCHMARK(bm_green)->Arg(1)->Arg(2)->Arg(4);

  void bm_hnf(benchmark::State& state) {
    std::size_t const                  n = static_cast<std::size_t>(state.range(0));
    std::mt19937                       rng(1);
    std::uniform_int_distribution<int> d(-50, 50);
    std::vector<ZVector>               vs(2 * n, ZVector(n));
    for (auto& v : vs) {
      for (auto& x : v) {
        x = d(rng);
      }
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(hnf_column(n, vs));
    }
  }
  BENCHMARK(bm_hnf)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

  void bm_verify_bound(benchmark::State& state) {
    auto const& gens = generators_of(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify_bound(gens));
    }
    state.SetLabel(corpus()[static_cast<std::size_t>(state.range(0))].name);
  }
  BENCHMARK(bm_verify_bound)->Arg(0)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
