#include "teamseq/abstraction/segment.hpp"

#include <algorithm>

#include "teamseq/abstraction/events.hpp"

namespace teamseq::abstraction {

namespace {

struct Boundary {
  std::size_t end_frame;
  std::optional<std::size_t> resume_frame;
  SegmentEnd kind;
};

}  // namespace

std::vector<Segment> segment_trial(const TrialLog& log, const AbstractionConfig& config) {
  if (log.frames.empty()) return {};
  const auto events = detect_events(log, config);
  const auto& frames = log.frames;

  std::vector<Boundary> cuts;
  std::optional<int> prev_owner;
  for (const Event& e : events) {
    if (!e.top_level()) continue;
    const std::size_t i = e.frame_start;
    switch (e.kind) {
      case EventKind::ball_out:
      case EventKind::goal_line_cross: {
        std::optional<std::size_t> resume;
        for (std::size_t k = i + 1; k < frames.size(); ++k)
          if (config.field.inside(frames[k].ball.pos())) {
            resume = k;
            break;
          }
        cuts.push_back({i, resume, SegmentEnd::ball_left_field});
        prev_owner.reset();
        continue;
      }
      case EventKind::block:
        cuts.push_back({i, i, SegmentEnd::block});
        break;
      case EventKind::possession_gain: {
        const bool lost = frames[i].robot(e.subject).team == Team::defend && prev_owner &&
                          frames[i].robot(*prev_owner).team == Team::attack;
        if (lost) cuts.push_back({i, i, SegmentEnd::intercept});
        break;
      }
      case EventKind::possession_challenge:
        break;
    }
    prev_owner = e.subject;
  }

  std::vector<Segment> out;
  auto emit = [&](std::size_t first, std::size_t last, SegmentEnd kind) {
    Segment s;
    s.first_frame = first;
    s.end = kind;
    s.log.frames.assign(frames.begin() + static_cast<std::ptrdiff_t>(first),
                        frames.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    if (kind == SegmentEnd::trial_end) s.log.trailer = log.trailer;
    const bool attacked = std::any_of(s.log.frames.begin(), s.log.frames.end(), [](const Frame& f) {
      return f.possession && f.robot(*f.possession).team == Team::attack;
    });
    if (attacked) out.push_back(std::move(s));
  };

  std::optional<std::size_t> start = 0;
  for (const auto& c : cuts) {
    if (start && c.end_frame >= *start) emit(*start, c.end_frame, c.kind);
    start = c.resume_frame;
  }
  if (start) emit(*start, frames.size() - 1, SegmentEnd::trial_end);
  return out;
}

}  // namespace teamseq::abstraction
