#include "teamseq/scoring/ranking.hpp"

#include <algorithm>

#include "teamseq/relcore/matcher.hpp"

namespace teamseq::scoring {

rel::ClassLabel attribute(const ClassStats& stats) {
  std::optional<rel::ClassLabel> best;
  double best_mu = 0.0;
  for (const auto& [c, m] : stats.mu) {
    const bool smaller_label = best && to_string(c) < to_string(*best);
    if (!best || m > best_mu || (m == best_mu && smaller_label)) {
      best = c;
      best_mu = m;
    }
  }
  return best.value_or(rel::ClassLabel::cbr);
}

std::vector<RankedPattern> rank(std::span<const mining::FrequentPattern> patterns,
                                std::span<const rel::RelationalSequence> corpus, std::size_t top_k,
                                FeatureMode mode) {
  if (top_k == 0) return {};
  rel::SymbolTable symbols;
  std::vector<rel::IndexedAtoms> targets;
  targets.reserve(corpus.size());
  for (const auto& s : corpus) targets.emplace_back(s.atoms, symbols);

  std::vector<RankedPattern> out;
  out.reserve(patterns.size());
  for (const auto& fp : patterns) {
    const rel::CompiledPattern compiled(fp.pattern.atoms, symbols);
    std::map<rel::ClassLabel, std::vector<double>> feats;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const double v = mode == FeatureMode::binary
                           ? (rel::Matcher::exists(compiled, targets[i]) ? 1.0 : 0.0)
                           : static_cast<double>(rel::Matcher::count(compiled, targets[i]));
      feats[corpus[i].label].push_back(v);
    }
    RankedPattern r;
    r.pattern = fp.pattern;
    r.key = fp.key;
    r.stats = stats_from_features(feats);
    r.fisher = fisher_score(r.stats);
    r.attributed_class = attribute(r.stats);
    r.support_total = fp.support_total;
    r.support_per_class = fp.support_per_class;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const RankedPattern& a, const RankedPattern& b) {
    if (a.fisher != b.fisher) return a.fisher > b.fisher;
    if (a.support_total != b.support_total) return a.support_total > b.support_total;
    return a.key < b.key;
  });
  if (out.size() > top_k) out.resize(top_k);
  return out;
}

}  // namespace teamseq::scoring
