#include "teamseq/simulator/reactive.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace teamseq::sim {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

const SimRobot* blocking_opponent(const World& w, const SimRobot& holder, Vec2 goal, const ReactiveParams& p) {
  const double ahead = (goal - holder.pos).bearing();
  const SimRobot* best = nullptr;
  for (const auto& o : w.robots) {
    if (o.team == holder.team) continue;
    const double d = distance(o.pos, holder.pos);
    if (d > p.blocked_range) continue;
    if (std::fabs(wrap_angle((o.pos - holder.pos).bearing() - ahead)) > p.blocked_cone_deg * kDeg) continue;
    if (!best || d < distance(best->pos, holder.pos)) best = &o;
  }
  return best;
}

int nearest_attacker(const World& w) {
  int id = -1;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : w.robots) {
    if (r.team != Team::attack) continue;
    const double d = distance(r.pos, w.ball);
    if (d < best) {
      best = d;
      id = r.id;
    }
  }
  return id;
}

Vec2 support_spot(const World& w, Vec2 anchor, const ReactiveParams& p) {
  const Rect inner{w.field.bounds().x_min + 0.2, w.field.bounds().x_max - 0.2, w.field.bounds().y_min + 0.2,
                   w.field.bounds().y_max - 0.2};
  const double side = anchor.y >= 0.0 ? -1.0 : 1.0;
  return inner.clamp({anchor.x + p.support_ahead, side * p.support_lane});
}

}  // namespace

Intent reactive_intent(const World& w, int id, ReactiveMemory& memory, Rng& rng, const ReactiveParams& p) {
  const SimRobot& me = w.robot(id);
  const Vec2 goal = w.field.attacked_goal_center();

  if (w.holds(id)) {
    if (memory.holder != id) {
      memory.holder = id;
      memory.dribble.reset();
    }
    if (distance(me.pos, goal) <= p.shoot_range) return Intent::kick_toward(goal);
    if (const SimRobot* opp = blocking_opponent(w, me, goal, p)) {
      if (!memory.dribble) memory.dribble = rng.bernoulli(p.dribble_probability);
      const double ahead = (goal - me.pos).bearing();
      const double side = wrap_angle((opp->pos - me.pos).bearing() - ahead) > 0.0 ? -1.0 : 1.0;
      if (*memory.dribble) {
        const Vec2 step = me.pos + unit(ahead + side * 70.0 * kDeg) * 0.5;
        return Intent::move_to(w.field.bounds().clamp(step));
      }
      return Intent::kick_toward(me.pos + unit(ahead + side * p.turn_deg * kDeg) * p.turn_kick_length);
    }
    return Intent::move_to(goal);
  }

  if (w.holder && w.robot(*w.holder).team == me.team) return Intent::move_to(support_spot(w, w.robot(*w.holder).pos, p));
  if (nearest_attacker(w) == id) return Intent::grab();
  return Intent::move_to(support_spot(w, w.ball, p));
}

void step_reactive(const World& w, ReactiveMemory& memory, Rng& rng, std::span<Intent> intents,
                   const ReactiveParams& p) {
  if (!w.holder || w.robot(*w.holder).team != Team::attack) memory.holder.reset();
  for (std::size_t i = 0; i < w.robots.size(); ++i)
    if (w.robots[i].team == Team::attack) intents[i] = reactive_intent(w, w.robots[i].id, memory, rng, p);
}

}  // namespace teamseq::sim
