#include "teamseq/abstraction/outcome.hpp"

namespace teamseq::abstraction {

std::string_view to_string(OutcomeKind kind) noexcept {
  switch (kind) {
    case OutcomeKind::goal: return "goal";
    case OutcomeKind::to_goal: return "to_goal";
    case OutcomeKind::ball_out: return "ball_out";
    case OutcomeKind::block: return "block";
    case OutcomeKind::out_of_time: return "out_of_time";
  }
  return "?";
}

std::optional<OutcomeKind> parse_outcome(std::string_view name) noexcept {
  for (auto k : {OutcomeKind::goal, OutcomeKind::to_goal, OutcomeKind::ball_out, OutcomeKind::block,
                 OutcomeKind::out_of_time})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

rel::Atom TrialOutcome::atom(const std::string& time_constant) const {
  return rel::ground(std::string(to_string(kind)), {time_constant});
}

TrialOutcome classify_outcome(const TrialLog& log, const AbstractionConfig& config) {
  if (log.frames.empty()) throw LogError("empty trial log");
  const FieldModel& field = config.field;
  const Frame& last = log.frames.back();

  if (!field.inside(last.ball.pos())) {
    // Find the frame where the ball left, in case it rolled on outside.
    std::size_t i = log.frames.size() - 1;
    while (i > 0 && !field.inside(log.frames[i - 1].ball.pos())) --i;
    if (i == 0) throw LogError("ball outside the field in every frame");
    const Frame& exit = log.frames[i];
    switch (field.classify_exit(log.frames[i - 1].ball.pos(), exit.ball.pos(), config.w_near)) {
      case BallExit::goal: return {OutcomeKind::goal, exit.t};
      case BallExit::near_post: return {OutcomeKind::to_goal, exit.t};
      default: return {OutcomeKind::ball_out, exit.t};
    }
  }
  if (last.possession) {
    const RobotState& holder = last.robot(*last.possession);
    if (holder.team == Team::defend && field.penalty_box.contains(holder.pos()))
      return {OutcomeKind::block, last.t};
  }
  if (log.trailer) {
    if (auto k = parse_outcome(log.trailer->outcome)) return {*k, log.trailer->t};
    throw LogError("unknown outcome '" + log.trailer->outcome + "'");
  }
  throw LogError("trial did not terminate");
}

}  // namespace teamseq::abstraction
