#include "teamseq/simulator/cbr.hpp"

#include <algorithm>
#include <limits>

namespace teamseq::sim {

std::string_view to_string(Phase p) noexcept {
  switch (p) {
    case Phase::select_coordinator: return "select_coordinator";
    case Phase::retrieving: return "retrieving";
    case Phase::positioning: return "positioning";
    case Phase::executing: return "executing";
    case Phase::reporting: return "reporting";
    case Phase::aborted: return "aborted";
  }
  return "?";
}

Problem problem_of(const World& w) {
  Problem p;
  p.ball = w.ball;
  p.goal = GoalColor::yellow;
  for (const auto& r : w.robots) (r.team == Team::attack ? p.teammates : p.opponents).push_back(r.pos);
  return p;
}

namespace {

std::vector<std::size_t> attacker_slots(const World& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.robots.size(); ++i)
    if (w.robots[i].team == Team::attack) out.push_back(i);
  return out;
}

int closest_attacker(const World& w) {
  int id = -1;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : w.robots)
    if (r.team == Team::attack && distance(r.pos, w.ball) < best) {
      best = distance(r.pos, w.ball);
      id = r.id;
    }
  return id;
}

class Runner {
 public:
  Runner(const World& w, const CaseBase& cb, CoordinationState& s, Rng& rng, std::span<Intent> intents,
         const CbrParams& p)
      : w_(w), cb_(cb), s_(s), rng_(rng), intents_(intents), p_(p),
        inner_{w.field.bounds().x_min + p.field_margin, w.field.bounds().x_max - p.field_margin,
               w.field.bounds().y_min + p.field_margin, w.field.bounds().y_max - p.field_margin} {}

  void run() {
    s_.pending_messages.clear();
    switch (s_.phase) {
      case Phase::reporting:
      case Phase::aborted:
        s_.phase = Phase::select_coordinator;
        [[fallthrough]];
      case Phase::select_coordinator:
        select();
        break;
      case Phase::retrieving:
        retrieve();
        break;
      case Phase::positioning:
        position();
        break;
      case Phase::executing:
        execute();
        break;
    }
  }

 private:
  void reactive() { step_reactive(w_, s_.fallback, rng_, intents_); }

  void broadcast(std::string msg) { s_.pending_messages.push_back(std::move(msg)); }

  void reset() {
    s_.coordinator.reset();
    s_.active.reset();
    s_.robot_for_role.clear();
    s_.next_step.clear();
    s_.done.clear();
    s_.positioned = false;
    s_.kicks = 0;
  }

  void abort(const std::string& why) {
    broadcast("abort " + why);
    ++s_.cases_aborted;
    reset();
    s_.phase = Phase::aborted;
    reactive();
  }

  void select() {
    reset();
    if (w_.possessing_team() == Team::defend || (!w_.holder && w_.ball_vel.norm() > p_.max_ball_speed)) {
      reactive();
      return;
    }
    s_.coordinator = closest_attacker(w_);
    s_.phase = Phase::retrieving;
    retrieve();
  }

  void retrieve() {
    const Problem problem = problem_of(w_);
    const auto found = cb_.retrieve(problem);
    if (!found) {
      s_.coordinator.reset();
      s_.phase = Phase::select_coordinator;
      reactive();
      return;
    }
    const auto slots = attacker_slots(w_);
    s_.active = *found->c;
    s_.anchor = problem.ball;
    s_.robot_for_role.clear();
    for (std::size_t robot : found->assignment.robot_for_role) s_.robot_for_role.push_back(w_.robots[slots[robot]].id);
    s_.next_step.assign(s_.active->solution.size(), 0);
    s_.done.assign(s_.active->solution.size(), false);
    for (std::size_t k = 0; k < s_.done.size(); ++k) s_.done[k] = s_.active->solution[k].empty();
    s_.phase = Phase::positioning;
    s_.phase_start = w_.t;
    ++s_.cases_started;
    broadcast("case " + s_.active->name);
    position();
  }

  Vec2 adapted(std::size_t role) const { return inner_.clamp(s_.anchor + s_.active->adapted_offset(role)); }

  Vec2 target(const Target& t) const {
    return t.goal ? s_.active->attacked_goal(w_.field) : inner_.clamp(s_.anchor + t.offset);
  }

  std::optional<std::size_t> role_of(int id) const {
    for (std::size_t k = 0; k < s_.robot_for_role.size(); ++k)
      if (!s_.active->solution[k].empty() && s_.robot_for_role[k] == id) return k;
    return std::nullopt;
  }

  /// Attackers without a role keep to a support lane.
  void idle_robots() {
    ReactiveMemory scratch;
    for (std::size_t i : attacker_slots(w_))
      if (!role_of(w_.robots[i].id)) {
        const Intent in = reactive_intent(w_, w_.robots[i].id, scratch, rng_);
        intents_[i] = in.kind == IntentKind::move_to ? in : Intent::wait_sync(w_.ball);
      }
  }

  std::size_t slot_of(int id) const {
    for (std::size_t i = 0; i < w_.robots.size(); ++i)
      if (w_.robots[i].id == id) return i;
    return 0;
  }

  void position() {
    const Case& c = *s_.active;
    if (w_.possessing_team() == Team::defend) return abort("opponent has the ball");
    if (!c.scope_ball.contains(w_.field.region_of(w_.ball))) return abort("ball left the scope");
    if (w_.t - s_.phase_start > p_.positioning_timeout) return abort("positioning timeout");

    bool all = true;
    for (std::size_t k = 0; k < c.solution.size(); ++k) {
      if (c.solution[k].empty()) continue;
      const int id = s_.robot_for_role[k];
      const SimRobot& r = w_.robot(id);
      const std::size_t i = slot_of(id);
      if (w_.holds(id)) {
        intents_[i] = Intent::wait_sync(c.attacked_goal(w_.field));
        continue;
      }
      const Vec2 at = adapted(k);
      if (distance(r.pos, at) > p_.arrive_tolerance) {
        intents_[i] = Intent::move_to(at);
        all = false;
      } else {
        intents_[i] = Intent::wait_sync(w_.ball);
      }
    }
    idle_robots();
    if (!all) return;

    // Everyone is in place: synchronized start.
    broadcast("start");
    s_.positioned = true;
    for (std::size_t k = 0; k < c.solution.size(); ++k)
      if (!c.solution[k].empty() && c.solution[k][0].kind == StepKind::move &&
          (w_.holds(s_.robot_for_role[k]) || distance(w_.robot(s_.robot_for_role[k]).pos, adapted(k)) <= p_.arrive_tolerance))
        s_.next_step[k] = 1;
    s_.phase = Phase::executing;
    s_.phase_start = s_.step_start = w_.t;
    execute();
  }

  void execute() {
    const Case& c = *s_.active;
    if (w_.possessing_team() == Team::defend) return abort("opponent has the ball");
    if (s_.kicks == 0 && !c.scope_ball.contains(w_.field.region_of(w_.ball)) && !w_.holder)
      return abort("ball left the scope");
    if (w_.t - s_.step_start > p_.step_timeout) return abort("step timeout");

    bool progressed = false;
    for (std::size_t k = 0; k < c.solution.size(); ++k) {
      if (s_.done[k]) continue;
      const int id = s_.robot_for_role[k];
      const std::size_t i = slot_of(id);
      // Finish every step already satisfied this tick.
      for (;;) {
        if (s_.next_step[k] >= c.solution[k].size()) {
          s_.done[k] = true;
          broadcast("done " + std::to_string(id));
          break;
        }
        const Step& step = c.solution[k][s_.next_step[k]];
        bool finished = false;
        switch (step.kind) {
          case StepKind::move: {
            const Vec2 at = target(step.target);
            finished = distance(w_.robot(id).pos, at) <= p_.arrive_tolerance;
            intents_[i] = Intent::move_to(at);
            break;
          }
          case StepKind::grab:
            finished = w_.holds(id);
            intents_[i] = Intent::grab();
            break;
          case StepKind::kick:
            finished = w_.last_kicker == id && !w_.holder;
            intents_[i] = Intent::kick_toward(target(step.target));
            if (finished) {
              ++s_.kicks;
              broadcast("kicked " + std::to_string(id));
            }
            break;
          case StepKind::wait:
            finished = s_.kicks > waits_seen(k);
            intents_[i] = Intent::wait_sync(w_.ball);
            break;
        }
        if (!finished) break;
        ++s_.next_step[k];
        progressed = true;
      }
      if (s_.done[k]) intents_[i] = Intent::wait_sync(w_.ball);
    }
    if (progressed) s_.step_start = w_.t;
    idle_robots();
    if (std::all_of(s_.done.begin(), s_.done.end(), [](bool d) { return d; })) {
      broadcast("report");
      ++s_.cases_completed;
      reset();
      s_.phase = Phase::reporting;
    }
  }

  /// Kicks the role had already waited for before its current step.
  int waits_seen(std::size_t role) const {
    int n = 0;
    for (std::size_t j = 0; j < s_.next_step[role]; ++j)
      if (s_.active->solution[role][j].kind == StepKind::wait) ++n;
    return n;
  }

  const World& w_;
  const CaseBase& cb_;
  CoordinationState& s_;
  Rng& rng_;
  std::span<Intent> intents_;
  const CbrParams& p_;
  Rect inner_;
};

}  // namespace

void step_cbr(const World& world, const CaseBase& casebase, CoordinationState& state, Rng& rng,
              std::span<Intent> intents, const CbrParams& params) {
  Runner(world, casebase, state, rng, intents, params).run();
}

}  // namespace teamseq::sim
