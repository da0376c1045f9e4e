#pragma once

#include <optional>
#include <span>

#include "teamseq/simulator/world.hpp"

namespace teamseq::sim {

struct ReactiveParams {
  double shoot_range = 1.5;    ///< holder shoots from this distance to the goal centre
  double blocked_range = 0.6;  ///< opponent ahead of the holder within this distance
  double blocked_cone_deg = 60.0;
  double dribble_probability = 0.5;  ///< sidestep rather than turn and kick
  double turn_deg = 55.0;      ///< kick direction offset when turning
  double turn_kick_length = 1.2;
  double support_ahead = 0.6;
  double support_lane = 0.9;
};

/// What the reactive team remembers between ticks: the choice made for the
/// current holder when it meets an opponent.
struct ReactiveMemory {
  std::optional<int> holder;
  std::optional<bool> dribble;
};

/// Fills the attackers' intents (indexed like world.robots). The holder
/// shoots when close to goal, sidesteps or turns and kicks when an opponent
/// blocks its way, and advances towards goal otherwise. The attacker
/// nearest a ball it does not own chases it; the other spreads to a
/// support lane. No pass is ever planned.
void step_reactive(const World& world, ReactiveMemory& memory, Rng& rng, std::span<Intent> intents,
                   const ReactiveParams& params = {});

/// Reactive intent of a single attacker.
Intent reactive_intent(const World& world, int id, ReactiveMemory& memory, Rng& rng,
                       const ReactiveParams& params = {});

}  // namespace teamseq::sim
