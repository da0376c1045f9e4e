#include "log_builder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace teamseq::fixtures {

using abstraction::Team;

LogBuilder::LogBuilder() {
  next_.robots = {
      {1, Team::attack, 0.0, 0.0, 0.0},
      {2, Team::attack, -1.0, 1.0, 0.0},
      {3, Team::defend, 1.5, -1.5, std::numbers::pi},
      {4, Team::defend, 1.5, 1.5, std::numbers::pi},
  };
  next_.ball = {0.5, 0.0, 0.0, 0.0};
}

LogBuilder& LogBuilder::frame(double t) {
  if (!log_.frames.empty()) next_ = log_.frames.back();
  next_.t = t;
  log_.frames.push_back(next_);
  return *this;
}

abstraction::RobotState& LogBuilder::state(int id) {
  if (log_.frames.empty()) throw std::logic_error("frame() first");
  for (auto& r : log_.frames.back().robots)
    if (r.id == id) return r;
  throw std::out_of_range("no robot " + std::to_string(id));
}

LogBuilder& LogBuilder::robot(int id, double x, double y) {
  auto& r = state(id);
  r.x = x;
  r.y = y;
  return *this;
}

LogBuilder& LogBuilder::robot(int id, double x, double y, double heading) {
  robot(id, x, y);
  state(id).heading = heading;
  return *this;
}

LogBuilder& LogBuilder::ball(double x, double y, double vx, double vy) {
  if (log_.frames.empty()) throw std::logic_error("frame() first");
  log_.frames.back().ball = {x, y, vx, vy};
  return *this;
}

LogBuilder& LogBuilder::possession(std::optional<int> id) {
  if (log_.frames.empty()) throw std::logic_error("frame() first");
  log_.frames.back().possession = id;
  return *this;
}

LogBuilder& LogBuilder::hold(int id) {
  const auto& r = state(id);
  const double x = r.x + 0.12 * std::cos(r.heading), y = r.y + 0.12 * std::sin(r.heading);
  ball(std::round(x * 1e4) / 1e4, std::round(y * 1e4) / 1e4);
  return possession(id);
}

LogBuilder& LogBuilder::trailer(std::string outcome, double t) {
  log_.trailer = abstraction::LogTrailer{std::move(outcome), t};
  return *this;
}

}  // namespace teamseq::fixtures
