#pragma once

#include <cstddef>
#include <vector>

#include "teamseq/abstraction/config.hpp"
#include "teamseq/abstraction/trial_log.hpp"

namespace teamseq::abstraction {

enum class SegmentEnd : unsigned char {
  intercept,        ///< a defender took the ball from the attackers
  block,            ///< a defender took the ball inside the penalty box
  ball_left_field,  ///< goal, to_goal or ball_out
  trial_end,
};

/// One attack episode. The log includes the boundary frame, so the event
/// that ended the episode is visible in it.
struct Segment {
  TrialLog log;
  SegmentEnd end = SegmentEnd::trial_end;
  std::size_t first_frame = 0;
};

/// Splits a trial at ball-out, goal, block and intercept boundaries. After an
/// intercept or block the next episode starts at the boundary frame; after
/// the ball leaves the field it starts when the ball is back in play.
/// Episodes in which no attacker ever holds the ball are dropped. Only the
/// final episode keeps the log's trailer.
std::vector<Segment> segment_trial(const TrialLog& log, const AbstractionConfig& config = {});

}  // namespace teamseq::abstraction
