#pragma once

#include <optional>
#include <span>

#include "teamseq/abstraction/actions.hpp"
#include "teamseq/abstraction/outcome.hpp"
#include "teamseq/abstraction/trial_log.hpp"
#include "teamseq/relcore/term.hpp"

namespace teamseq::abstraction {

/// Lays out one sequence: each action atom followed by its five relations,
/// next_a links between consecutive action times, the outcome atom (at the
/// last action's time) when present, then agent/opponent role facts.
/// Time constants are renumbered time_1..time_n. Throws std::invalid_argument
/// when `actions` is empty.
rel::RelationalSequence emit_sequence(std::span<const ActionAtomGroup> actions,
                                      const std::optional<TrialOutcome>& outcome, rel::ClassLabel label,
                                      const Roster& roster = {});

}  // namespace teamseq::abstraction
