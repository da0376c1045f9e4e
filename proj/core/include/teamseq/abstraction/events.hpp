#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "teamseq/abstraction/config.hpp"
#include "teamseq/abstraction/trial_log.hpp"

namespace teamseq::abstraction {

enum class EventKind : unsigned char {
  possession_gain,
  possession_challenge,
  ball_out,
  goal_line_cross,
  block,
};

std::string_view to_string(EventKind kind) noexcept;

/// A time interval during which something persists. Top-level events
/// (everything but challenges) tile the log: each one lasts until the next
/// top-level event starts or the log ends. A challenge is contemporary with
/// the possession event it happens in.
struct Event {
  EventKind kind = EventKind::possession_gain;
  double t_start = 0.0;
  double t_end = 0.0;
  std::size_t frame_start = 0;
  std::size_t frame_end = 0;
  /// Owner for possession_gain/block, challenger for possession_challenge,
  /// last owner (or 0) for ball_out/goal_line_cross.
  int subject = 0;
  std::optional<std::size_t> contemporary_with;

  // possession_gain / block: first frame where the owner no longer holds
  // the ball, and the ball speed at that frame.
  std::optional<std::size_t> release_frame;
  double release_speed = 0.0;

  // possession_challenge: holder position at open and close, and whether the
  // holder still had the ball when the challenger fell back.
  Vec2 holder_start;
  Vec2 holder_end;
  bool escaped = false;

  bool top_level() const noexcept { return kind != EventKind::possession_challenge; }
};

/// Events ordered by t_start; a host precedes its challenges. A robot that
/// regains the ball it released less than t_free earlier, with nobody else
/// touching it, keeps its possession event.
/// Throws LogError on an empty or malformed log.
std::vector<Event> detect_events(const TrialLog& log, const AbstractionConfig& config = {});

}  // namespace teamseq::abstraction
