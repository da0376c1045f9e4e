#include <algorithm>
#include <numbers>

#include "teamseq/abstraction/actions.hpp"

namespace teamseq::abstraction {

std::string_view predicate_of(ActionKind kind) noexcept {
  switch (kind) {
    case ActionKind::getball: return "getball";
    case ActionKind::catch_ball: return "catch";
    case ActionKind::pass: return "pass";
    case ActionKind::dribbling: return "dribbling";
    case ActionKind::progress_to_goal: return "progressToGoal";
    case ActionKind::alone_progress_to_goal: return "aloneProgressToGoal";
    case ActionKind::intercept: return "intercept";
  }
  return "?";
}

std::optional<ActionKind> action_from_predicate(std::string_view predicate) noexcept {
  for (auto k : kAllActions)
    if (predicate_of(k) == predicate) return k;
  return std::nullopt;
}

std::string robot_constant(int id) { return "robot_" + std::to_string(id); }

namespace {

std::string_view horizontal(const Vec2& local, double eps) {
  if (local.x > eps) return "forward";
  if (local.x < -eps) return "behind";
  return "same";
}

std::string_view vertical(const Vec2& local, double eps) {
  if (local.y > eps) return "left";
  if (local.y < -eps) return "right";
  return "same";
}

std::string_view view_sector(double bearing) {
  constexpr double q = std::numbers::pi / 4;
  if (bearing >= -q && bearing <= q) return "front";
  if (bearing > q && bearing <= 3 * q) return "left";
  if (bearing < -q && bearing >= -3 * q) return "right";
  return "backwards";
}

}  // namespace

std::array<rel::Atom, 5> describe_world(const Frame& frame, int actor, const std::string& time_constant,
                                        const AbstractionConfig& config) {
  const RobotState& me = frame.robot(actor);
  const std::string me_c = robot_constant(actor);
  const double eps = config.eps_same;

  auto relation = [&](std::string_view pred, Vec2 target) {
    const Vec2 local = to_egocentric(me.pos(), me.heading, target);
    return rel::ground(std::string(pred), {time_constant, me_c, horizontal(local, eps), vertical(local, eps)});
  };

  const RobotState* mate = nullptr;
  std::vector<const RobotState*> opps;
  for (const auto& r : frame.robots) {
    if (r.id == actor) continue;
    if (r.team == me.team) {
      if (!mate) mate = &r;
    } else {
      opps.push_back(&r);
    }
  }
  std::sort(opps.begin(), opps.end(), [](auto* a, auto* b) { return a->id < b->id; });
  if (!mate || opps.size() < 2) throw LogError("describe_world needs a teammate and two opponents");

  const Vec2 box = to_egocentric(me.pos(), me.heading, config.field.penalty_box.center());
  return {relation("rel_with_team", mate->pos()),
          rel::ground("direction_view", {time_constant, me_c, view_sector(box.bearing())}),
          relation("rel_with_ball", frame.ball.pos()),
          relation("rel_with_opp1", opps[0]->pos()),
          relation("rel_with_opp2", opps[1]->pos())};
}

}  // namespace teamseq::abstraction
