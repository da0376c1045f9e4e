#include "teamseq/abstraction/events.hpp"

#include <limits>

namespace teamseq::abstraction {

std::string_view to_string(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::possession_gain: return "possession_gain";
    case EventKind::possession_challenge: return "possession_challenge";
    case EventKind::ball_out: return "ball_out";
    case EventKind::goal_line_cross: return "goal_line_cross";
    case EventKind::block: return "block";
  }
  return "?";
}

namespace {

bool holds_possession(EventKind k) {
  return k == EventKind::possession_gain || k == EventKind::block;
}

// Nearest opponent of `holder` within the challenge radius of the ball.
std::optional<int> challenger(const Frame& f, const RobotState& holder, double radius) {
  std::optional<int> best;
  double best_d = radius;
  for (const auto& r : f.robots) {
    if (r.team == holder.team) continue;
    const double d = distance(r.pos(), f.ball.pos());
    if (d <= best_d) {
      best = r.id;
      best_d = d;
    }
  }
  return best;
}

}  // namespace

std::vector<Event> detect_events(const TrialLog& log, const AbstractionConfig& config) {
  if (log.frames.empty()) throw LogError("empty trial log");
  validate(log);

  const auto& frames = log.frames;
  std::vector<Event> events;
  std::optional<std::size_t> open;
  std::optional<std::size_t> chal;
  double last_release_t = -std::numeric_limits<double>::infinity();
  int last_owner = 0;
  bool ball_was_out = false;

  auto close_challenge = [&](std::size_t i, bool escaped) {
    Event& c = events[*chal];
    c.t_end = frames[i].t;
    c.frame_end = i;
    c.escaped = escaped;
    const Event& host = events[*c.contemporary_with];
    c.holder_end = frames[i].robot(host.subject).pos();
    chal.reset();
  };
  auto close_top = [&](std::size_t i) {
    if (chal) close_challenge(i, false);
    if (open) {
      events[*open].t_end = frames[i].t;
      events[*open].frame_end = i;
    }
  };
  auto start_top = [&](EventKind kind, std::size_t i, int subject) {
    close_top(i);
    Event e;
    e.kind = kind;
    e.t_start = e.t_end = frames[i].t;
    e.frame_start = e.frame_end = i;
    e.subject = subject;
    events.push_back(e);
    open = events.size() - 1;
  };

  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Frame& f = frames[i];
    const bool ball_in = config.field.inside(f.ball.pos());
    if (!ball_in) {
      if (!ball_was_out) {
        ball_was_out = true;
        const bool goal = i > 0 && config.field.classify_exit(frames[i - 1].ball.pos(), f.ball.pos(),
                                                              0.0) == BallExit::goal;
        start_top(goal ? EventKind::goal_line_cross : EventKind::ball_out, i, last_owner);
      }
      continue;
    }
    ball_was_out = false;

    if (open && holds_possession(events[*open].kind)) {
      Event& e = events[*open];
      if (!e.release_frame && f.possession != e.subject) {
        e.release_frame = i;
        e.release_speed = f.ball.vel().norm();
        last_release_t = f.t;
      }
    }

    if (f.possession) {
      const int who = *f.possession;
      const bool same_owner =
          open && holds_possession(events[*open].kind) && events[*open].subject == who;
      const bool continuing =
          same_owner && (!events[*open].release_frame || f.t - last_release_t < config.t_free);
      if (continuing) {
        events[*open].release_frame.reset();
      } else {
        const RobotState& r = f.robot(who);
        const bool in_box = config.field.penalty_box.contains(r.pos());
        start_top(r.team == Team::defend && in_box ? EventKind::block : EventKind::possession_gain, i,
                  who);
        last_owner = who;
      }
    }

    const bool holding = open && holds_possession(events[*open].kind) && f.possession &&
                         *f.possession == events[*open].subject;
    if (holding) {
      const RobotState& holder = f.robot(*f.possession);
      const auto opp = challenger(f, holder, config.challenge_radius);
      if (!chal && opp) {
        Event c;
        c.kind = EventKind::possession_challenge;
        c.t_start = c.t_end = f.t;
        c.frame_start = c.frame_end = i;
        c.subject = *opp;
        c.contemporary_with = *open;
        c.holder_start = c.holder_end = holder.pos();
        events.push_back(c);
        chal = events.size() - 1;
      } else if (chal && !opp) {
        close_challenge(i, true);
      }
    } else if (chal) {
      close_challenge(i, false);
    }
  }
  close_top(frames.size() - 1);
  return events;
}

}  // namespace teamseq::abstraction
