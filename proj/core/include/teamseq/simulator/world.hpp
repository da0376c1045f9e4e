#pragma once

#include <optional>
#include <span>
#include <vector>

#include "teamseq/abstraction/trial_log.hpp"
#include "teamseq/field.hpp"
#include "teamseq/simulator/config.hpp"
#include "teamseq/simulator/rng.hpp"

namespace teamseq::sim {

using abstraction::Team;

struct SimRobot {
  int id = 0;
  Team team = Team::attack;
  Vec2 pos;
  double heading = 0.0;
  double cooldown = 0.0;  ///< s until the robot may grab again
};

enum class IntentKind : unsigned char { idle, move_to, kick_toward, grab, wait_sync };

struct Intent {
  IntentKind kind = IntentKind::idle;
  Vec2 target;

  static Intent idle() { return {}; }
  static Intent move_to(Vec2 p) { return {IntentKind::move_to, p}; }
  static Intent kick_toward(Vec2 p) { return {IntentKind::kick_toward, p}; }
  static Intent grab() { return {IntentKind::grab, {}}; }
  /// Stay put facing `look_at`.
  static Intent wait_sync(Vec2 look_at) { return {IntentKind::wait_sync, look_at}; }
};

struct World {
  FieldModel field;
  double t = 0.0;
  std::vector<SimRobot> robots;  ///< ascending id
  Vec2 ball;
  Vec2 ball_vel;
  std::optional<int> holder;
  /// Robot that kicked the ball most recently, while it is still free.
  std::optional<int> last_kicker;

  SimRobot& robot(int id);
  const SimRobot& robot(int id) const;
  std::vector<const SimRobot*> team(Team team) const;
  bool holds(int id) const { return holder && *holder == id; }
  /// Holder's team, if any.
  std::optional<Team> possessing_team() const;

  /// Frame with every number rounded to 4 decimals, as it will be logged.
  abstraction::Frame snapshot() const;
};

/// Advances one tick. `intents` is indexed like world.robots.
///
///   1. kicks: a holder with a kick intent releases the ball towards the
///      target with seeded angle and strength noise;
///   2. robots move towards their targets at most robot_speed * dt;
///   3. a held ball follows its holder, a free ball rolls and slows down;
///   4. grabs: robots with a grab intent within grab_radius of a free ball
///      succeed with probability 1 - grab_failure (nearest first);
///      opponents next to the holder steal with steal_probability.
void step_world(World& world, std::span<const Intent> intents, const Kinematics& kin, Rng& rng);

}  // namespace teamseq::sim
