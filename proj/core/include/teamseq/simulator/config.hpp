#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "teamseq/field.hpp"
#include "teamseq/relcore/term.hpp"

namespace teamseq::sim {

enum class OpponentConfig : unsigned char {
  dg,  ///< a goalie in the penalty box and one defender
  two_defenders,
};

std::string_view to_string(OpponentConfig c) noexcept;  // "dg" / "2d"
std::optional<OpponentConfig> parse_opponent_config(std::string_view text) noexcept;

using Approach = rel::ClassLabel;

struct Kinematics {
  double dt = 0.05;
  double robot_speed = 0.3;
  double opponent_speed = 0.22;  ///< defending robots
  double kick_speed = 1.5;
  double kick_angle_noise_deg = 10.0;  ///< uniform +-
  double kick_strength_noise = 0.1;    ///< uniform +- fraction of kick_speed
  double grab_failure = 0.2;
  double grab_radius = 0.15;
  double hold_offset = 0.12;  ///< ball distance in front of its holder
  double friction = 0.5;      ///< m/s^2
  double kick_cooldown = 0.6;  ///< s before a kicker may grab again
  double grab_retry = 0.3;     ///< s after a failed grab
  double steal_radius = 0.25;
  double steal_probability = 0.05;  ///< per tick, opponent next to the holder
};

struct SimConfig {
  int scenario = 1;  ///< 1..4
  OpponentConfig opponents = OpponentConfig::dg;
  Approach approach = Approach::rea;
  std::uint64_t seed = 1;
  double timeout = 60.0;
  Kinematics kinematics;
  FieldModel field;
  /// Test hooks: replace a team's policy by idle intents.
  bool idle_attackers = false;
  bool idle_defenders = false;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// Initial ball position of a scenario.
Vec2 scenario_ball(int scenario);

}  // namespace teamseq::sim
