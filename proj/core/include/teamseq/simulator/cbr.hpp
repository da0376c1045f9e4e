#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teamseq/simulator/casebase.hpp"
#include "teamseq/simulator/reactive.hpp"
#include "teamseq/simulator/world.hpp"

namespace teamseq::sim {

enum class Phase : unsigned char { select_coordinator, retrieving, positioning, executing, reporting, aborted };

std::string_view to_string(Phase p) noexcept;

struct CbrParams {
  double arrive_tolerance = 0.08;
  double positioning_timeout = 8.0;
  double step_timeout = 6.0;
  double field_margin = 0.1;  ///< adapted positions are kept this far inside the field
  double max_ball_speed = 0.3;  ///< no retrieval while a free ball rolls faster
};

/// Team-level coordination state under the cbr approach. Messages between
/// robots are delivered reliably and in order, so they are kept here as a
/// plain log of what was broadcast this tick.
struct CoordinationState {
  Phase phase = Phase::select_coordinator;
  std::optional<int> coordinator;
  std::optional<Case> active;
  Vec2 anchor;                        ///< problem ball when the case was retrieved
  std::vector<int> robot_for_role;    ///< robot id per role of the active case
  std::vector<std::size_t> next_step;  ///< per role
  std::vector<bool> done;             ///< per role
  bool positioned = false;            ///< positioning finished for the active case
  int kicks = 0;                      ///< kicks completed in the active case
  double phase_start = 0.0;
  double step_start = 0.0;
  std::vector<std::string> pending_messages;
  ReactiveMemory fallback;
  std::size_t cases_started = 0;
  std::size_t cases_completed = 0;
  std::size_t cases_aborted = 0;
};

/// Fills the attackers' intents (indexed like world.robots) and advances
/// the coordination state: the attacker closest to the ball becomes the
/// coordinator and retrieves a case; the robots move to their adapted
/// positions, start together, run their gameplays and report. An opponent
/// taking the ball, the ball leaving the case scope before the first kick,
/// or a timeout aborts the case. Without an applicable case the team plays
/// reactively for that tick.
void step_cbr(const World& world, const CaseBase& casebase, CoordinationState& state, Rng& rng,
              std::span<Intent> intents, const CbrParams& params = {});

/// Problem description the coordinator builds from the world.
Problem problem_of(const World& world);

}  // namespace teamseq::sim
