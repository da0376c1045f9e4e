#include <benchmark/benchmark.h>

#include "teamseq/relcore/matcher.hpp"
#include "teamseq/relcore/occurrence.hpp"
#include "teamseq/relcore/parser.hpp"
#include "teamseq/simulator/casebase.hpp"
#include "teamseq/simulator/trial.hpp"
#include "teamseq/abstraction/pipeline.hpp"

using namespace teamseq;

namespace {

// One long simulated sequence as the specific side.
const rel::RelationalSequence& long_sequence() {
  static const rel::RelationalSequence seq = [] {
    const auto cb = sim::CaseBase::standard();
    rel::RelationalSequence best;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      sim::SimConfig cfg;
      cfg.approach = rel::ClassLabel::cbr;
      cfg.seed = seed;
      for (auto& s : abstraction::abstract_trial(sim::run_trial(cfg, &cb), cfg.approach, "b"))
        if (s.atoms.size() > best.atoms.size()) best = std::move(s);
    }
    return best;
  }();
  return seq;
}

void BM_ThetaSubsumes(benchmark::State& state) {
  const std::vector<const char*> patterns{"getball(A,B)", "getball(A,B),next_a(A,C),pass(C,B,D)",
                                          "pass(A,B,C),next_a(A,D),getball(D,C),next_a(D,E),pass(E,C,F)",
                                          "getball(A,B),direction_view(A,B,front),pass(C,B,D),rel_with_ball(C,D,forward,X)"};
  const auto p = rel::parse_pattern(patterns[static_cast<std::size_t>(state.range(0))]);
  const auto& seq = long_sequence();
  for (auto _ : state) benchmark::DoNotOptimize(rel::theta_subsumes(p.atoms, seq.atoms));
  state.counters["atoms"] = static_cast<double>(seq.atoms.size());
}
BENCHMARK(BM_ThetaSubsumes)->DenseRange(0, 3);

void BM_CountEmbeddings(benchmark::State& state) {
  const auto p = rel::parse_pattern("getball(A,B),next_a(A,C),pass(C,B,D)");
  const auto& seq = long_sequence();
  for (auto _ : state) benchmark::DoNotOptimize(rel::count_embeddings(p, seq));
}
BENCHMARK(BM_CountEmbeddings);

}  // namespace

BENCHMARK_MAIN();
