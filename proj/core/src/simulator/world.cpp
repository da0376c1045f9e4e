#include "teamseq/simulator/world.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace teamseq::sim {

namespace {

double round4(double v) {
  const double r = std::round(v * 1e4) / 1e4;
  return r == 0.0 ? 0.0 : r;
}

bool wants_ball(const SimRobot& r, const Intent& in, const World& w) {
  return in.kind == IntentKind::grab || (in.kind == IntentKind::kick_toward && !w.holds(r.id));
}

}  // namespace

SimRobot& World::robot(int id) {
  for (auto& r : robots)
    if (r.id == id) return r;
  throw std::out_of_range("no robot " + std::to_string(id));
}

const SimRobot& World::robot(int id) const {
  for (const auto& r : robots)
    if (r.id == id) return r;
  throw std::out_of_range("no robot " + std::to_string(id));
}

std::vector<const SimRobot*> World::team(Team team) const {
  std::vector<const SimRobot*> out;
  for (const auto& r : robots)
    if (r.team == team) out.push_back(&r);
  return out;
}

std::optional<Team> World::possessing_team() const {
  if (!holder) return std::nullopt;
  return robot(*holder).team;
}

abstraction::Frame World::snapshot() const {
  abstraction::Frame f;
  f.t = round4(t);
  for (const auto& r : robots)
    f.robots.push_back({r.id, r.team, round4(r.pos.x), round4(r.pos.y), round4(wrap_angle(r.heading))});
  f.ball = {round4(ball.x), round4(ball.y), round4(ball_vel.x), round4(ball_vel.y)};
  f.possession = holder;
  return f;
}

void step_world(World& w, std::span<const Intent> intents, const Kinematics& kin, Rng& rng) {
  if (intents.size() != w.robots.size()) throw std::invalid_argument("one intent per robot expected");
  const double dt = kin.dt;
  const Rect bounds = w.field.bounds();

  // 1. Kicks.
  for (std::size_t i = 0; i < w.robots.size(); ++i) {
    SimRobot& r = w.robots[i];
    if (intents[i].kind != IntentKind::kick_toward || !w.holds(r.id)) continue;
    const double noise = kin.kick_angle_noise_deg * std::numbers::pi / 180.0;
    const double angle = (intents[i].target - w.ball).bearing() + rng.uniform(-noise, noise);
    const double speed = kin.kick_speed * (1.0 + rng.uniform(-kin.kick_strength_noise, kin.kick_strength_noise));
    w.ball_vel = unit(angle) * speed;
    w.holder.reset();
    w.last_kicker = r.id;
    r.cooldown = kin.kick_cooldown;
    r.heading = angle;
  }

  // 2. Robot motion.
  for (std::size_t i = 0; i < w.robots.size(); ++i) {
    SimRobot& r = w.robots[i];
    const Intent& in = intents[i];
    std::optional<Vec2> goal;
    if (in.kind == IntentKind::move_to) goal = in.target;
    else if (wants_ball(r, in, w) && !w.holds(r.id)) goal = w.ball;
    else if (in.kind == IntentKind::wait_sync) r.heading = (in.target - r.pos).bearing();
    if (goal) {
      const Vec2 d = *goal - r.pos;
      const double dist = d.norm();
      const double stop = wants_ball(r, in, w) ? kin.hold_offset : 0.0;
      const double speed = r.team == Team::attack ? kin.robot_speed : kin.opponent_speed;
      const double travel = std::min(speed * dt, std::max(0.0, dist - stop));
      if (dist > 1e-9) {
        r.heading = d.bearing();
        r.pos += d * (travel / dist);
      }
    }
    r.pos = bounds.clamp(r.pos);
    r.cooldown = std::max(0.0, r.cooldown - dt);
  }

  // 3. Ball.
  if (w.holder) {
    const SimRobot& h = w.robot(*w.holder);
    const Vec2 next = h.pos + unit(h.heading) * kin.hold_offset;
    w.ball_vel = (next - w.ball) * (1.0 / dt);
    w.ball = next;
  } else {
    w.ball += w.ball_vel * dt;
    const double speed = w.ball_vel.norm();
    if (speed > 0.0) {
      const double slower = std::max(0.0, speed - kin.friction * dt);
      w.ball_vel = w.ball_vel * (slower / speed);
    }
  }

  // 4. Grabs and steals.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < w.robots.size(); ++i) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return distance(w.robots[a].pos, w.ball) < distance(w.robots[b].pos, w.ball);
  });
  if (!w.holder) {
    for (std::size_t i : order) {
      SimRobot& r = w.robots[i];
      if (!wants_ball(r, intents[i], w) || r.cooldown > 0.0) continue;
      if (distance(r.pos, w.ball) > kin.grab_radius) continue;
      if (rng.bernoulli(1.0 - kin.grab_failure)) {
        w.holder = r.id;
        w.last_kicker.reset();
        break;
      }
      r.cooldown = kin.grab_retry;
    }
  } else {
    const Team holder_team = w.robot(*w.holder).team;
    for (std::size_t i : order) {
      SimRobot& r = w.robots[i];
      if (r.team == holder_team || intents[i].kind != IntentKind::grab || r.cooldown > 0.0) continue;
      if (distance(r.pos, w.ball) > kin.steal_radius) continue;
      if (rng.bernoulli(kin.steal_probability)) {
        w.robot(*w.holder).cooldown = kin.kick_cooldown;
        w.holder = r.id;
      }
      break;
    }
  }
  if (w.holder) {
    SimRobot& h = w.robot(*w.holder);
    const Vec2 next = h.pos + unit(h.heading) * kin.hold_offset;
    if (distance(next, w.ball) > 1e-12) {
      // A fresh grab: the robot turns to the ball it picked up.
      h.heading = (w.ball - h.pos).bearing();
      w.ball = h.pos + unit(h.heading) * kin.hold_offset;
      w.ball_vel = {};
    }
  }
  w.t += dt;
}

}  // namespace teamseq::sim
