#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "teamseq/abstraction/config.hpp"
#include "teamseq/abstraction/trial_log.hpp"
#include "teamseq/relcore/term.hpp"

namespace teamseq::abstraction {

enum class OutcomeKind : unsigned char { goal, to_goal, ball_out, block, out_of_time };

std::string_view to_string(OutcomeKind kind) noexcept;
std::optional<OutcomeKind> parse_outcome(std::string_view name) noexcept;

struct TrialOutcome {
  OutcomeKind kind = OutcomeKind::out_of_time;
  double t = 0.0;

  rel::Atom atom(const std::string& time_constant) const;
  bool operator==(const TrialOutcome&) const = default;
};

/// Reads how the trial ended from its last frames: the ball leaving the
/// field (goal, to_goal within w_near of a post, ball_out) or a defender
/// holding the ball in the penalty box (block). Otherwise the trailer line
/// decides (out_of_time). Throws LogError for a log that did not terminate.
TrialOutcome classify_outcome(const TrialLog& log, const AbstractionConfig& config = {});

}  // namespace teamseq::abstraction
