#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teamseq/abstraction/config.hpp"
#include "teamseq/abstraction/events.hpp"
#include "teamseq/abstraction/trial_log.hpp"
#include "teamseq/relcore/term.hpp"

namespace teamseq::abstraction {

enum class ActionKind : unsigned char {
  getball,
  catch_ball,
  pass,
  dribbling,
  progress_to_goal,
  alone_progress_to_goal,
  intercept,
};

inline constexpr ActionKind kAllActions[] = {
    ActionKind::pass,           ActionKind::dribbling,        ActionKind::catch_ball,
    ActionKind::intercept,      ActionKind::alone_progress_to_goal,
    ActionKind::progress_to_goal, ActionKind::getball,
};

/// Predicate name, e.g. "catch" or "aloneProgressToGoal".
std::string_view predicate_of(ActionKind kind) noexcept;
std::optional<ActionKind> action_from_predicate(std::string_view predicate) noexcept;

std::string robot_constant(int id);

/// An action atom and the egocentric description of its subject, all at
/// the same time constant.
struct ActionAtomGroup {
  rel::Atom action;
  /// rel_with_team, direction_view, rel_with_ball, rel_with_opp1, rel_with_opp2
  std::array<rel::Atom, 5> relations;
  std::string time_constant;
  std::size_t frame = 0;
  double t = 0.0;
};

/// Egocentric relations of `actor` at `frame`. opp1/opp2 are the opponents
/// by ascending id.
std::array<rel::Atom, 5> describe_world(const Frame& frame, int actor, const std::string& time_constant,
                                        const AbstractionConfig& config = {});

/// Recognized attacker actions in temporal order, with time constants
/// time_1, time_2, ... Ambiguous possession transitions become getball and
/// append a message to `warnings` when given.
std::vector<ActionAtomGroup> classify_actions(std::span<const Event> events, const TrialLog& log,
                                              const AbstractionConfig& config = {},
                                              std::vector<std::string>* warnings = nullptr);

}  // namespace teamseq::abstraction
