#include <benchmark/benchmark.h>

#include "teamseq/abstraction/pipeline.hpp"
#include "teamseq/miner/background.hpp"
#include "teamseq/miner/miner.hpp"
#include "teamseq/scoring/ranking.hpp"
#include "teamseq/simulator/casebase.hpp"
#include "teamseq/simulator/trial.hpp"

using namespace teamseq;

namespace {

// Scenario 1, both approaches, `trials` trials each.
std::vector<rel::RelationalSequence> corpus(std::uint64_t trials) {
  const auto cb = sim::CaseBase::standard();
  std::vector<rel::RelationalSequence> out;
  for (auto approach : rel::kAllClasses)
    for (std::uint64_t t = 0; t < trials; ++t) {
      sim::SimConfig cfg;
      cfg.approach = approach;
      cfg.seed = sim::derive_seed(3, static_cast<std::uint64_t>(approach), t);
      auto seqs = abstraction::abstract_trial(sim::run_trial(cfg, &cb), approach, "b" + std::to_string(t));
      out.insert(out.end(), seqs.begin(), seqs.end());
    }
  return out;
}

void BM_MineActionsOnly(benchmark::State& state) {
  const auto c = corpus(10);
  mining::MiningConfig cfg;
  cfg.min_support_alpha = 0.1;
  cfg.maxsize = static_cast<std::size_t>(state.range(0));
  cfg.constraints = mining::BackgroundKnowledge::soccer_actions_only();
  std::size_t found = 0;
  for (auto _ : state) found = mining::mine(c, cfg).size();
  state.counters["patterns"] = static_cast<double>(found);
  state.counters["sequences"] = static_cast<double>(c.size());
}
BENCHMARK(BM_MineActionsOnly)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MineFullLanguage(benchmark::State& state) {
  const auto c = corpus(5);
  mining::MiningConfig cfg;
  cfg.min_support_alpha = 0.3;
  cfg.maxsize = static_cast<std::size_t>(state.range(0));
  cfg.constraints = mining::BackgroundKnowledge::soccer();
  std::size_t found = 0;
  for (auto _ : state) found = mining::mine(c, cfg).size();
  state.counters["patterns"] = static_cast<double>(found);
}
BENCHMARK(BM_MineFullLanguage)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state) {
  const auto c = corpus(10);
  mining::MiningConfig cfg;
  cfg.min_support_alpha = 0.1;
  cfg.maxsize = 4;
  cfg.constraints = mining::BackgroundKnowledge::soccer_actions_only();
  const auto patterns = mining::mine(c, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(scoring::rank(patterns, c, 20));
  state.counters["patterns"] = static_cast<double>(patterns.size());
}
BENCHMARK(BM_Rank)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
