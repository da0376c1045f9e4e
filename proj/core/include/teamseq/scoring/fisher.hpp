#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "teamseq/relcore/term.hpp"

namespace teamseq::scoring {

enum class FeatureMode : unsigned char {
  embeddings,  ///< number of distinct embeddings per sequence
  binary,      ///< 1 when the pattern occurs in the sequence, else 0
};

/// Per-class mean and population standard deviation of a pattern's
/// per-sequence feature, and the grand mean.
struct ClassStats {
  std::map<rel::ClassLabel, std::size_t> n;
  std::map<rel::ClassLabel, double> mu;
  std::map<rel::ClassLabel, double> alpha;
  double mu_all = 0.0;
};

/// Returned when the within-class scatter is zero but the classes differ.
inline constexpr double kFisherInfinity = std::numeric_limits<double>::infinity();

/// Only classes with at least one value are included.
ClassStats stats_from_features(const std::map<rel::ClassLabel, std::vector<double>>& features);

std::map<rel::ClassLabel, std::vector<double>> features(const rel::Pattern& pattern,
                                                        std::span<const rel::RelationalSequence> corpus,
                                                        FeatureMode mode = FeatureMode::embeddings);

ClassStats class_stats(const rel::Pattern& pattern, std::span<const rel::RelationalSequence> corpus,
                       FeatureMode mode = FeatureMode::embeddings);

/// sum_i n_i (mu_i - mu)^2 / sum_i n_i alpha_i^2, with 0/0 = 0 and x/0 =
/// kFisherInfinity for x > 0.
double fisher_score(const ClassStats& stats);

}  // namespace teamseq::scoring
