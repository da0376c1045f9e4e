#include "teamseq/simulator/opponents.hpp"

#include <stdexcept>

namespace teamseq::sim {

namespace {

constexpr double kArrived = 0.02;
constexpr double kBoxMargin = 0.05;

}  // namespace

Rect home_region(OpponentConfig config, int id, const FieldModel& field) {
  const Rect b = field.bounds();
  const double front = field.penalty_box.x_min - kBoxMargin;
  if (config == OpponentConfig::dg) {
    if (id == 3) return field.penalty_box;
    if (id == 4) return {0.0, front, b.y_min, b.y_max};
  } else {
    if (id == 3) return {-1.5, 1.0, b.y_min, b.y_max};
    if (id == 4) return {0.5, front, b.y_min, b.y_max};
  }
  throw std::out_of_range("no defender " + std::to_string(id));
}

Vec2 opponent_start(OpponentConfig config, int id) {
  if (config == OpponentConfig::dg) {
    if (id == 3) return {2.75, 0.0};
    if (id == 4) return {1.0, 0.0};
  } else {
    if (id == 3) return {0.0, 0.5};
    if (id == 4) return {1.5, -0.5};
  }
  throw std::out_of_range("no defender " + std::to_string(id));
}

void step_opponents(OpponentConfig config, const World& w, std::span<Intent> intents) {
  for (std::size_t i = 0; i < w.robots.size(); ++i) {
    const SimRobot& r = w.robots[i];
    if (r.team != Team::defend) continue;
    const Rect region = home_region(config, r.id, w.field);
    if (w.holds(r.id)) {
      const Vec2 clear{w.field.bounds().x_min, r.pos.y * 1.5};
      intents[i] = Intent::kick_toward(clear);
    } else if (region.contains(w.ball) && w.possessing_team() != Team::defend) {
      intents[i] = Intent::grab();
    } else {
      const Vec2 spot = region.clamp(w.ball);
      intents[i] = distance(spot, r.pos) > kArrived ? Intent::move_to(spot) : Intent::wait_sync(w.ball);
    }
  }
}

}  // namespace teamseq::sim
