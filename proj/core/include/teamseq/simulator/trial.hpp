#pragma once

#include <cstddef>

#include "teamseq/abstraction/trial_log.hpp"
#include "teamseq/simulator/casebase.hpp"
#include "teamseq/simulator/config.hpp"
#include "teamseq/simulator/world.hpp"

namespace teamseq::sim {

struct TrialStats {
  std::size_t ticks = 0;
  std::size_t cases_started = 0;
  std::size_t cases_completed = 0;
  std::size_t cases_aborted = 0;
};

/// Initial world of a trial: attackers 1 and 2 behind the scenario ball
/// (with a small seeded jitter), defenders 3 and 4 at their start spots.
World initial_world(const SimConfig& config, Rng& rng);

/// Runs one trial with a fixed time step until the ball leaves the field,
/// a defender holds the ball inside the penalty box, or the timeout. Every
/// frame is logged and the trailer names the outcome. Throws
/// std::invalid_argument for an invalid config or a cbr trial without a
/// case base.
abstraction::TrialLog run_trial(const SimConfig& config, const CaseBase* casebase = nullptr,
                                TrialStats* stats = nullptr);

}  // namespace teamseq::sim
