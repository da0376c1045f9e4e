#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "teamseq/miner/miner.hpp"
#include "teamseq/relcore/term.hpp"
#include "teamseq/scoring/fisher.hpp"

namespace teamseq::scoring {

struct RankedPattern {
  rel::Pattern pattern;
  std::string key;
  double fisher = 0.0;
  rel::ClassLabel attributed_class = rel::ClassLabel::cbr;
  ClassStats stats;
  std::size_t support_total = 0;
  std::map<rel::ClassLabel, std::size_t> support_per_class;
};

/// Class with the larger mean; ties go to the label that sorts first.
rel::ClassLabel attribute(const ClassStats& stats);

/// Scores every pattern on the corpus and keeps the best `top_k`: fisher
/// descending (infinite first), then support descending, then key.
std::vector<RankedPattern> rank(std::span<const mining::FrequentPattern> patterns,
                                std::span<const rel::RelationalSequence> corpus, std::size_t top_k,
                                FeatureMode mode = FeatureMode::embeddings);

}  // namespace teamseq::scoring
