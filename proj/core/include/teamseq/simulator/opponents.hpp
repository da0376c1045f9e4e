#pragma once

#include <span>

#include "teamseq/simulator/config.hpp"
#include "teamseq/simulator/world.hpp"

namespace teamseq::sim {

/// Home region of defending robot `id` (3 or 4). Under dg robot 3 is the
/// goalie and owns the penalty box; field defenders stop short of the box.
Rect home_region(OpponentConfig config, int id, const FieldModel& field);

/// Starting position of defending robot `id`.
Vec2 opponent_start(OpponentConfig config, int id);

/// Fills the intents of the defending robots (indexed like world.robots);
/// other entries are left untouched. A defender holding the ball clears it
/// towards -x; otherwise it goes for the ball when the ball is inside its
/// home region and waits on the region border facing the ball when not.
void step_opponents(OpponentConfig config, const World& world, std::span<Intent> intents);

}  // namespace teamseq::sim
