#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "teamseq/miner/background.hpp"
#include "teamseq/relcore/term.hpp"

namespace teamseq::mining {

/// What the corpus offers to the refinement operator: the predicates that
/// occur, and the constants seen in every value argument position.
struct Vocabulary {
  std::set<std::string> predicates;
  std::map<std::pair<std::string, std::size_t>, std::vector<std::string>> values;

  static Vocabulary from_corpus(std::span<const rel::RelationalSequence> corpus,
                                const BackgroundKnowledge& bk);
};

/// Structural reading of a pattern under the declarations: variable types,
/// action times and the next_a chain.
struct PatternShape {
  std::vector<std::string> time_vars;    // first-occurrence order
  std::vector<std::string> entity_vars;  // first-occurrence order
  std::set<std::string> action_times;
  std::optional<std::string> chain_end;  // last time on the next_a chain
  bool dangling = false;                 // chain_end has no action yet
  std::size_t variable_count = 0;

  static PatternShape of(const rel::Pattern& pattern, const BackgroundKnowledge& bk);
};

/// Children of `pattern` that add exactly one atom.
///
///   - empty pattern: one action atom over fresh variables, for every way of
///     making its entity arguments equal or distinct;
///   - dangling next_a target: only an action on that time, entity arguments
///     drawn from existing entities or fresh ones;
///   - otherwise: next_a from the chain end to a fresh time; a descriptive
///     atom on a time that has an action, over existing entities, with
///     observed constants or private variables as values; a role fact over
///     existing entities.
///
/// Children that repeat an existing atom are not produced. Fresh variables
/// continue the pattern's A, B, ... naming.
std::vector<rel::Pattern> specialize(const rel::Pattern& pattern, const BackgroundKnowledge& bk,
                                     const Vocabulary& vocabulary);

}  // namespace teamseq::mining
