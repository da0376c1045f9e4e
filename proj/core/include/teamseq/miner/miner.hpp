#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "teamseq/miner/background.hpp"
#include "teamseq/relcore/term.hpp"

namespace teamseq::mining {

struct MiningConfig {
  double min_support_alpha = 0.10;
  std::size_t maxsize = 3;
  BackgroundKnowledge constraints = BackgroundKnowledge::soccer();
  /// When set, the threshold applies to the support within this class only.
  std::optional<rel::ClassLabel> target_class;

  /// Throws std::invalid_argument when alpha is outside (0,1] or maxsize is 0.
  void validate() const;
};

struct FrequentPattern {
  rel::Pattern pattern;
  std::string key;  ///< canonical_form(pattern)
  std::size_t support_total = 0;
  std::map<rel::ClassLabel, std::size_t> support_per_class;
  std::map<rel::ClassLabel, double> mean_embeddings_per_class;
};

struct MiningStats {
  std::vector<std::size_t> candidates_per_level;
  std::vector<std::size_t> frequent_per_level;
};

/// ceil(alpha * n), with a small tolerance so that e.g. 0.3 * 10 gives 3.
std::size_t support_threshold(double alpha, std::size_t n);

/// Level-wise search. Every child of a frequent pattern is canonicalized,
/// skipped if already seen, dropped if not reduced, and counted only on the
/// sequences that contain its parent. Output is ordered by length, then key.
/// Throws std::invalid_argument for an empty corpus or bad config, and
/// UndeclaredPredicate when the corpus uses an undeclared predicate.
std::vector<FrequentPattern> mine(std::span<const rel::RelationalSequence> corpus, const MiningConfig& config,
                                  MiningStats* stats = nullptr);

}  // namespace teamseq::mining
