#include "szego/laws.hpp"
#include "szego/realization.hpp"

#include <benchmark/benchmark.h>

using namespace szego;

namespace {

CaseSpec hard_spec() {
  CaseSpec best;
  for (const auto& c : enumerate_cases(6)) {
    if (!c.construction_unsupported && c.qC + c.kC > best.qC + best.kC) best = c;
  }
  return best;
}

// One full round of candidate resamples for a single spec.
void BM_RealizeRound(benchmark::State& state) {
  SearchConfig cfg;
  cfg.parallel = state.range(0) != 0;
  const CaseSpec spec = hard_spec();
  for (auto _ : state) {
    long accepted = 0;
    if (cfg.parallel) {
#pragma omp parallel for reduction(+ : accepted) schedule(dynamic)
      for (int i = 0; i < cfg.resamples; ++i) accepted += try_candidate(spec, Mode::polynomial, cfg, 0, i) ? 1 : 0;
    } else {
      for (int i = 0; i < cfg.resamples; ++i) accepted += try_candidate(spec, Mode::polynomial, cfg, 0, i) ? 1 : 0;
    }
    benchmark::DoNotOptimize(accepted);
  }
}
BENCHMARK(BM_RealizeRound)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RealizeAll(benchmark::State& state) {
  SearchConfig cfg;
  cfg.parallel = state.range(1) != 0;
  for (auto _ : state) {
    RealizeSummary s = realize_all(static_cast<int>(state.range(0)), Mode::polynomial, cfg);
    benchmark::DoNotOptimize(s.realized);
  }
}
BENCHMARK(BM_RealizeAll)->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_LawSweep(benchmark::State& state) {
  LawConfig cfg;
  cfg.scale = 0.1;
  cfg.parallel = state.range(0) != 0;
  for (auto _ : state) {
    LawResult r = law_roundtrip(cfg, Mode::polynomial);
    benchmark::DoNotOptimize(r.failures);
  }
}
BENCHMARK(BM_LawSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
