#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "teamseq/relcore/term.hpp"

namespace teamseq::scoring {

/// Action atom counts per class, in the row order pass, dribbling, catch,
/// intercept, aloneProgressToGoal, progressToGoal, getball.
struct ActionTable {
  std::vector<std::string> actions;
  std::map<rel::ClassLabel, std::map<std::string, std::size_t>> counts;
  std::map<rel::ClassLabel, std::size_t> sequences;

  std::size_t count(rel::ClassLabel c, const std::string& action) const;
  std::size_t total(rel::ClassLabel c) const;
  /// Share of `action` among the class's action atoms, in percent (0 when
  /// the class has none).
  double percentage(rel::ClassLabel c, const std::string& action) const;
};

ActionTable action_distribution(std::span<const rel::RelationalSequence> corpus);

}  // namespace teamseq::scoring
