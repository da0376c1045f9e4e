#include "teamseq/simulator/config.hpp"

#include <stdexcept>
#include <string>

namespace teamseq::sim {

std::string_view to_string(OpponentConfig c) noexcept {
  return c == OpponentConfig::dg ? "dg" : "2d";
}

std::optional<OpponentConfig> parse_opponent_config(std::string_view text) noexcept {
  if (text == "dg" || text == "DG") return OpponentConfig::dg;
  if (text == "2d" || text == "2D") return OpponentConfig::two_defenders;
  return std::nullopt;
}

void SimConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("invalid simulator config: " + what); };
  auto probability = [&](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) fail(std::string(name) + " must be in [0, 1]");
  };
  if (scenario < 1 || scenario > 4) fail("scenario must be 1..4");
  if (!(timeout > 0.0)) fail("timeout must be positive");
  const Kinematics& k = kinematics;
  if (!(k.dt > 0.0)) fail("dt must be positive");
  if (!(k.robot_speed > 0.0) || !(k.opponent_speed > 0.0) || !(k.kick_speed > 0.0)) fail("speeds must be positive");
  if (!(k.friction >= 0.0)) fail("friction must be non-negative");
  if (!(k.kick_angle_noise_deg >= 0.0) || !(k.kick_strength_noise >= 0.0) || k.kick_strength_noise >= 1.0)
    fail("kick noise out of range");
  probability(k.grab_failure, "grab_failure");
  probability(k.steal_probability, "steal_probability");
  if (!(k.grab_radius > 0.0) || !(k.hold_offset > 0.0) || k.hold_offset > k.grab_radius)
    fail("hold_offset must be positive and within grab_radius");
  if (k.kick_cooldown < 0.0 || k.grab_retry < 0.0) fail("cooldowns must be non-negative");
}

Vec2 scenario_ball(int scenario) {
  switch (scenario) {
    case 1: return {-1.5, 0.0};
    case 2: return {-1.5, 1.2};
    case 3: return {0.5, 0.0};
    case 4: return {0.5, 1.0};
  }
  throw std::invalid_argument("scenario must be 1..4, got " + std::to_string(scenario));
}

}  // namespace teamseq::sim
