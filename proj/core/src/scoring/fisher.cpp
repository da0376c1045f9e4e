#include "teamseq/scoring/fisher.hpp"

#include <cmath>

#include "teamseq/relcore/matcher.hpp"

namespace teamseq::scoring {

ClassStats stats_from_features(const std::map<rel::ClassLabel, std::vector<double>>& features) {
  ClassStats s;
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& [c, xs] : features) {
    if (xs.empty()) continue;
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    double sq = 0.0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    s.n[c] = xs.size();
    s.mu[c] = mean;
    s.alpha[c] = std::sqrt(sq / static_cast<double>(xs.size()));
    total += sum;
    count += xs.size();
  }
  s.mu_all = count ? total / static_cast<double>(count) : 0.0;
  // Keep equal class means from producing a rounding-sized numerator.
  if (!s.mu.empty()) {
    const double first = s.mu.begin()->second;
    bool equal = true;
    for (const auto& [_, m] : s.mu) equal = equal && m == first;
    if (equal) s.mu_all = first;
  }
  return s;
}

std::map<rel::ClassLabel, std::vector<double>> features(const rel::Pattern& pattern,
                                                        std::span<const rel::RelationalSequence> corpus,
                                                        FeatureMode mode) {
  rel::SymbolTable symbols;
  const rel::CompiledPattern compiled(pattern.atoms, symbols);
  std::map<rel::ClassLabel, std::vector<double>> out;
  for (const auto& seq : corpus) {
    const rel::IndexedAtoms target(seq.atoms, symbols);
    const double v = mode == FeatureMode::binary
                         ? (rel::Matcher::exists(compiled, target) ? 1.0 : 0.0)
                         : static_cast<double>(rel::Matcher::count(compiled, target));
    out[seq.label].push_back(v);
  }
  return out;
}

ClassStats class_stats(const rel::Pattern& pattern, std::span<const rel::RelationalSequence> corpus,
                       FeatureMode mode) {
  return stats_from_features(features(pattern, corpus, mode));
}

double fisher_score(const ClassStats& stats) {
  double num = 0.0, den = 0.0;
  for (const auto& [c, n] : stats.n) {
    const double nd = static_cast<double>(n);
    const double d = stats.mu.at(c) - stats.mu_all;
    const double a = stats.alpha.at(c);
    num += nd * d * d;
    den += nd * a * a;
  }
  if (den == 0.0) return num > 0.0 ? kFisherInfinity : 0.0;
  return num / den;
}

}  // namespace teamseq::scoring
