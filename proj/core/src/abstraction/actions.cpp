#include "teamseq/abstraction/actions.hpp"

#include <algorithm>
#include <cmath>

namespace teamseq::abstraction {

namespace {

struct Recognized {
  ActionKind kind;
  std::size_t frame;
  int actor;     // whose relations are described
  int first;     // first robot argument
  int receiver;  // pass only
};

bool is_attacker(const Frame& f, int id) { return f.robot(id).team == Team::attack; }

}  // namespace

std::vector<ActionAtomGroup> classify_actions(std::span<const Event> events, const TrialLog& log,
                                              const AbstractionConfig& config,
                                              std::vector<std::string>* warnings) {
  const auto& frames = log.frames;
  const Rect& box = config.field.penalty_box;
  std::vector<Recognized> found;

  auto warn = [&](std::size_t frame, const std::string& what) {
    if (warnings) warnings->push_back("frame " + std::to_string(frame) + ": " + what);
  };

  int prev_owner = 0;  // robot ids start at 1; 0 means no previous owner
  double prev_release_t = 0.0;
  bool prev_kicked = false;

  for (std::size_t idx = 0; idx < events.size(); ++idx) {
    const Event& e = events[idx];
    if (!e.top_level()) continue;
    if (e.kind == EventKind::ball_out || e.kind == EventKind::goal_line_cross) {
      prev_owner = 0;
      continue;
    }
    const std::size_t f0 = e.frame_start;
    const int s = e.subject;
    const Frame& start = frames[f0];

    if (is_attacker(start, s)) {
      const double gap = prev_owner != 0 ? start.t - prev_release_t : 0.0;
      if (prev_owner == 0 || gap >= config.t_free) {
        found.push_back({ActionKind::getball, f0, s, s, 0});
      } else if (!is_attacker(start, prev_owner)) {
        found.push_back({ActionKind::catch_ball, f0, s, s, 0});
      } else if (prev_owner != s && prev_kicked) {
        found.push_back({ActionKind::pass, f0, s, prev_owner, s});
      } else {
        warn(f0, "ambiguous gain by " + robot_constant(s) + " after " + robot_constant(prev_owner) +
                     ", classified as getball");
        found.push_back({ActionKind::getball, f0, s, s, 0});
      }

      // Progress while unchallenged, measured against the penalty box.
      std::vector<const Event*> challenges;
      for (const Event& c : events)
        if (c.contemporary_with == idx) challenges.push_back(&c);
      const std::size_t last = e.release_frame ? *e.release_frame : e.frame_end;
      double anchor = box.distance_to(start.robot(s).pos());
      for (std::size_t k = f0; k <= last && k < frames.size(); ++k) {
        const Frame& fk = frames[k];
        if (fk.possession != s) continue;
        const double d = box.distance_to(fk.robot(s).pos());
        const bool challenged = std::any_of(challenges.begin(), challenges.end(), [&](const Event* c) {
          return c->frame_start <= k && k < c->frame_end;
        });
        if (challenged) {
          anchor = d;
          continue;
        }
        if (anchor - d >= config.d_prog - 1e-9) {
          bool alone = true;
          for (const auto& r : fk.robots)
            if (r.id != s && r.team == Team::attack && box.distance_to(r.pos()) < d) alone = false;
          found.push_back({alone ? ActionKind::alone_progress_to_goal : ActionKind::progress_to_goal, k, s, s, 0});
          anchor = d;
        }
      }
      for (const Event* c : challenges) {
        if (c->escaped && distance(c->holder_start, c->holder_end) >= config.d_drib - 1e-9)
          found.push_back({ActionKind::dribbling, c->frame_end, s, s, 0});
      }
    } else if (prev_owner != 0 && is_attacker(start, prev_owner) && e.kind == EventKind::possession_gain) {
      found.push_back({ActionKind::intercept, f0, prev_owner, prev_owner, 0});
    }

    prev_owner = s;
    prev_release_t = e.release_frame ? frames[*e.release_frame].t : e.t_end;
    prev_kicked = e.release_frame && e.release_speed >= config.kick_speed;
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const Recognized& a, const Recognized& b) { return a.frame < b.frame; });

  std::vector<ActionAtomGroup> out;
  out.reserve(found.size());
  for (const auto& r : found) {
    ActionAtomGroup g;
    g.time_constant = "time_" + std::to_string(out.size() + 1);
    g.frame = r.frame;
    g.t = frames[r.frame].t;
    const std::string pred(predicate_of(r.kind));
    if (r.kind == ActionKind::pass)
      g.action = rel::ground(pred, {g.time_constant, robot_constant(r.first), robot_constant(r.receiver)});
    else
      g.action = rel::ground(pred, {g.time_constant, robot_constant(r.first)});
    g.relations = describe_world(frames[r.frame], r.actor, g.time_constant, config);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace teamseq::abstraction
