#include "teamseq/simulator/trial.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "teamseq/abstraction/outcome.hpp"
#include "teamseq/simulator/cbr.hpp"
#include "teamseq/simulator/opponents.hpp"
#include "teamseq/simulator/reactive.hpp"

namespace teamseq::sim {

namespace {

constexpr double kJitter = 0.05;

std::optional<std::string> terminal_outcome(const abstraction::TrialLog& log, const FieldModel& field) {
  const abstraction::Frame& f = log.frames.back();
  if (!field.inside(f.ball.pos())) {
    abstraction::AbstractionConfig ac;
    ac.field = field;
    return std::string(to_string(abstraction::classify_outcome(log, ac).kind));
  }
  if (f.possession) {
    const auto& h = f.robot(*f.possession);
    if (h.team == Team::defend && field.penalty_box.contains(h.pos())) return "block";
  }
  return std::nullopt;
}

}  // namespace

World initial_world(const SimConfig& config, Rng& rng) {
  World w;
  w.field = config.field;
  w.ball = scenario_ball(config.scenario);
  const double side = w.ball.y > 0.0 ? -1.0 : 1.0;
  const Vec2 starts[] = {w.ball + Vec2{-0.35, 0.0}, w.ball + Vec2{-0.6, side * 0.8}};
  for (int k = 0; k < 2; ++k) {
    const Vec2 jitter{rng.uniform(-kJitter, kJitter), rng.uniform(-kJitter, kJitter)};
    w.robots.push_back({k + 1, Team::attack, w.field.bounds().clamp(starts[k] + jitter), 0.0, 0.0});
  }
  for (int id : {3, 4}) {
    const Vec2 p = opponent_start(config.opponents, id);
    w.robots.push_back({id, Team::defend, p, (w.ball - p).bearing(), 0.0});
  }
  return w;
}

abstraction::TrialLog run_trial(const SimConfig& config, const CaseBase* casebase, TrialStats* stats) {
  config.validate();
  if (config.approach == Approach::cbr && !config.idle_attackers && casebase == nullptr)
    throw std::invalid_argument("cbr trial needs a case base");

  Rng world_rng(config.seed);
  Rng policy_rng(splitmix64(config.seed));
  World w = initial_world(config, policy_rng);
  ReactiveMemory memory;
  CoordinationState coordination;

  abstraction::TrialLog log;
  log.frames.push_back(w.snapshot());
  const auto max_ticks = static_cast<std::size_t>(std::llround(config.timeout / config.kinematics.dt));
  std::vector<Intent> intents(w.robots.size());
  std::size_t tick = 0;
  std::optional<std::string> outcome;
  while (!outcome && tick < max_ticks) {
    std::fill(intents.begin(), intents.end(), Intent::idle());
    if (!config.idle_defenders) step_opponents(config.opponents, w, intents);
    if (!config.idle_attackers) {
      if (config.approach == Approach::cbr) step_cbr(w, *casebase, coordination, policy_rng, intents);
      else step_reactive(w, memory, policy_rng, intents);
    }
    step_world(w, intents, config.kinematics, world_rng);
    ++tick;
    log.frames.push_back(w.snapshot());
    outcome = terminal_outcome(log, w.field);
  }
  log.trailer = abstraction::LogTrailer{outcome.value_or("out_of_time"), log.frames.back().t};

  if (stats) {
    stats->ticks = tick;
    stats->cases_started = coordination.cases_started;
    stats->cases_completed = coordination.cases_completed;
    stats->cases_aborted = coordination.cases_aborted;
  }
  return log;
}

}  // namespace teamseq::sim
