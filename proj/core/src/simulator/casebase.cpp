#include "teamseq/simulator/casebase.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

namespace teamseq::sim {

std::string_view to_string(GoalColor g) noexcept { return g == GoalColor::yellow ? "yellow" : "cyan"; }

std::size_t Case::players_involved() const {
  return static_cast<std::size_t>(
      std::count_if(solution.begin(), solution.end(), [](const auto& steps) { return !steps.empty(); }));
}

Vec2 Case::adapted_offset(std::size_t role) const {
  const auto& steps = solution.at(role);
  if (!steps.empty() && steps.front().kind == StepKind::move && !steps.front().target.goal)
    return steps.front().target.offset;
  return role == 0 ? reference.offset : Vec2{};
}

Vec2 Case::attacked_goal(const FieldModel& field) const {
  return goal == GoalColor::yellow ? field.attacked_goal_center() : field.own_goal_center();
}

void validate_case(const Case& c, const FieldModel& field, std::size_t team_size) {
  auto fail = [&](const std::string& why) { throw CaseBaseError("case '" + c.name + "': " + why); };
  if (c.solution.empty()) fail("no solution");
  if (c.solution.size() > team_size) fail("more roles than robots");
  if (!field.inside(c.ball)) fail("ball outside the field");
  for (std::size_t k = 0; k < c.solution.size(); ++k) {
    if (!field.inside(c.ball + c.adapted_offset(k))) fail("adapted position outside the field");
    for (const auto& s : c.solution[k])
      if ((s.kind == StepKind::move || s.kind == StepKind::kick) && !s.target.goal &&
          !field.inside(c.ball + s.target.offset))
        fail("step target outside the field");
  }
  for (const auto* scope : {&c.scope_ball, &c.scope_opponents})
    for (int r : *scope)
      if (r < 0 || r >= field.region_count()) fail("region " + std::to_string(r) + " out of range");
}

namespace {

template <class F>
Case transformed(const Case& c, F&& point_map, double (*heading_map)(double), int (FieldModel::*region_map)(int) const,
                 const FieldModel& field, bool swap_goal, std::string_view suffix) {
  Case m = c;
  m.name += suffix;
  m.ball = point_map(c.ball);
  m.reference.offset = point_map(c.reference.offset);
  m.reference.heading = wrap_angle(heading_map(c.reference.heading));
  for (auto& p : m.teammates) p = point_map(p);
  for (auto& p : m.opponents) p = point_map(p);
  auto regions = [&](const std::set<int>& in) {
    std::set<int> out;
    for (int r : in) out.insert((field.*region_map)(r));
    return out;
  };
  m.scope_ball = regions(c.scope_ball);
  m.scope_opponents = regions(c.scope_opponents);
  for (auto& steps : m.solution)
    for (auto& s : steps)
      if (!s.target.goal) s.target.offset = point_map(s.target.offset);
  if (swap_goal) m.goal = c.goal == GoalColor::yellow ? GoalColor::cyan : GoalColor::yellow;
  return m;
}

double flip_y_heading(double h) { return -h; }
double flip_x_heading(double h) { return std::numbers::pi - h; }

}  // namespace

Case mirror_long_axis(const Case& c, const FieldModel& field) {
  return transformed(c, [](Vec2 p) { return Vec2{p.x, -p.y}; }, flip_y_heading, &FieldModel::mirror_region_long_axis,
                     field, false, "~y");
}

Case mirror_midfield(const Case& c, const FieldModel& field) {
  return transformed(c, [](Vec2 p) { return Vec2{-p.x, p.y}; }, flip_x_heading, &FieldModel::mirror_region_midfield,
                     field, true, "~x");
}

std::vector<Case> generate_symmetric_cases(const Case& c, const FieldModel& field) {
  return {mirror_long_axis(c, field), mirror_midfield(c, field), mirror_midfield(mirror_long_axis(c, field), field)};
}

std::vector<Vec2> counted_opponents(const Problem& p) {
  std::vector<Vec2> out;
  for (const auto& o : p.opponents)
    if (distance(o, p.ball) <= kOpponentRange) out.push_back(o);
  return out;
}

double harmonic_mean(const std::vector<double>& sims) {
  if (sims.empty()) return 0.0;
  double inv = 0.0;
  for (double s : sims) {
    if (s <= 0.0) return 0.0;
    inv += 1.0 / s;
  }
  return static_cast<double>(sims.size()) / inv;
}

double feature_similarity(double d, double rho) { return std::exp(-(d / rho) * (d / rho)); }

double similarity(const Problem& p, const Case& c) {
  const auto opps = counted_opponents(p);
  if (opps.size() != c.opponents.size()) return 0.0;
  std::vector<std::size_t> perm(opps.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> best_d;
  double best_sum = 0.0;
  do {
    std::vector<double> d;
    double sum = 0.0;
    for (std::size_t i = 0; i < opps.size(); ++i) {
      d.push_back(distance(opps[i] - p.ball, c.opponents[perm[i]]));
      sum += d.back();
    }
    if (best_d.empty() || sum < best_sum) {
      best_d = d;
      best_sum = sum;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<double> sims{feature_similarity(distance(p.ball, c.ball))};
  for (double d : best_d) sims.push_back(feature_similarity(d));
  return harmonic_mean(sims);
}

Assignment adaptation_cost(const Problem& p, const Case& c, const FieldModel& field) {
  const Rect inner{field.bounds().x_min + 0.1, field.bounds().x_max - 0.1, field.bounds().y_min + 0.1,
                   field.bounds().y_max - 0.1};
  std::vector<std::size_t> roles;
  for (std::size_t k = 0; k < c.solution.size(); ++k)
    if (!c.solution[k].empty()) roles.push_back(k);

  Assignment best;
  best.robot_for_role.assign(c.solution.size(), 0);
  if (roles.size() > p.teammates.size()) {
    best.cost = std::numeric_limits<double>::infinity();
    return best;
  }
  std::vector<std::size_t> robots(p.teammates.size());
  std::iota(robots.begin(), robots.end(), 0);
  bool found = false;
  do {
    double cost = 0.0;
    for (std::size_t i = 0; i < roles.size(); ++i)
      cost += distance(p.teammates[robots[i]], inner.clamp(p.ball + c.adapted_offset(roles[i])));
    if (!found || cost < best.cost - 1e-12) {
      found = true;
      best.cost = cost;
      for (std::size_t i = 0; i < roles.size(); ++i) best.robot_for_role[roles[i]] = robots[i];
    }
  } while (std::next_permutation(robots.begin(), robots.end()));
  return best;
}

void CaseBase::add(const Case& c) {
  validate_case(c, field_);
  cases_.push_back(c);
  index_[{c.goal, c.opponents.size()}].push_back(cases_.size() - 1);
}

void CaseBase::add_with_symmetries(const Case& c) {
  validate_case(c, field_);
  add(c);
  for (const auto& m : generate_symmetric_cases(c, field_)) add(m);
}

bool CaseBase::in_scope(const Problem& p, const Case& c) const {
  if (!c.scope_ball.contains(field_.region_of(p.ball))) return false;
  for (const auto& o : counted_opponents(p))
    if (!c.scope_opponents.contains(field_.region_of(o))) return false;
  return true;
}

std::optional<Retrieved> CaseBase::retrieve(const Problem& p) const {
  auto it = index_.find({p.goal, counted_opponents(p).size()});
  if (it == index_.end()) return std::nullopt;
  std::optional<Retrieved> best;
  for (std::size_t idx : it->second) {
    const Case& c = cases_[idx];
    if (!in_scope(p, c)) continue;
    Retrieved r{&c, adaptation_cost(p, c, field_), similarity(p, c)};
    if (!std::isfinite(r.assignment.cost)) continue;
    if (!best) {
      best = r;
      continue;
    }
    const auto key = [](const Retrieved& x) {
      return std::make_tuple(-static_cast<long>(x.c->players_involved()), -x.similarity, x.assignment.cost);
    };
    if (key(r) < key(*best) || (key(r) == key(*best) && r.c->name < best->c->name)) best = r;
  }
  return best;
}

std::vector<Case> CaseBase::parse_cases(std::istream& in) {
  std::vector<Case> out;
  std::optional<Case> cur;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw CaseBaseError("line " + std::to_string(lineno) + ": " + why);
  };
  auto read_vec = [&](std::istringstream& ls) {
    Vec2 v;
    if (!(ls >> v.x >> v.y)) fail("expected two numbers");
    return v;
  };
  auto read_regions = [&](std::istringstream& ls) {
    std::set<int> regions;
    std::string tok;
    while (ls >> tok) {
      if (tok == "*") {
        for (int r = 0; r < FieldModel{}.region_count(); ++r) regions.insert(r);
        continue;
      }
      try {
        regions.insert(std::stoi(tok));
      } catch (const std::exception&) {
        fail("bad region '" + tok + "'");
      }
    }
    return regions;
  };
  auto parse_step = [&](const std::string& text) {
    std::istringstream ss(text);
    std::string word;
    Step s;
    if (!(ss >> word)) fail("empty step");
    if (word == "grab") s.kind = StepKind::grab;
    else if (word == "wait") s.kind = StepKind::wait;
    else if (word == "move" || word == "kick") {
      s.kind = word == "move" ? StepKind::move : StepKind::kick;
      std::string first;
      if (!(ss >> first)) fail("step '" + word + "' needs a target");
      if (first == "goal") {
        s.target.goal = true;
      } else {
        std::istringstream rest(first + " " + std::string(std::istreambuf_iterator<char>(ss), {}));
        s.target.offset = read_vec(rest);
      }
    } else {
      fail("unknown step '" + word + "'");
    }
    return s;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "case") {
      if (cur) fail("nested case");
      cur.emplace();
      if (!(ls >> cur->name)) fail("case without name");
      continue;
    }
    if (!cur) fail("'" + key + "' outside a case");
    if (key == "end") {
      out.push_back(std::move(*cur));
      cur.reset();
    } else if (key == "goal") {
      std::string g;
      ls >> g;
      if (g == "yellow") cur->goal = GoalColor::yellow;
      else if (g == "cyan") cur->goal = GoalColor::cyan;
      else fail("unknown goal '" + g + "'");
    } else if (key == "ball") {
      cur->ball = read_vec(ls);
    } else if (key == "ref") {
      cur->reference.offset = read_vec(ls);
      if (!(ls >> cur->reference.heading)) fail("ref needs a heading");
    } else if (key == "team") {
      cur->teammates.push_back(read_vec(ls));
    } else if (key == "opp") {
      cur->opponents.push_back(read_vec(ls));
    } else if (key == "scope_ball") {
      cur->scope_ball = read_regions(ls);
    } else if (key == "scope_opp") {
      cur->scope_opponents = read_regions(ls);
    } else if (key == "robot") {
      std::string rest(std::istreambuf_iterator<char>(ls), {});
      std::vector<Step> steps;
      std::size_t start = 0;
      for (;;) {
        const auto bar = rest.find('|', start);
        steps.push_back(parse_step(rest.substr(start, bar - start)));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      cur->solution.push_back(std::move(steps));
    } else {
      fail("unknown field '" + key + "'");
    }
  }
  if (cur) throw CaseBaseError("case '" + cur->name + "' is missing 'end'");
  return out;
}

CaseBase CaseBase::parse(std::istream& in, FieldModel field) {
  CaseBase cb(field);
  for (const auto& c : parse_cases(in)) cb.add_with_symmetries(c);
  return cb;
}

CaseBase CaseBase::parse(std::string_view text, FieldModel field) {
  std::istringstream is{std::string(text)};
  return parse(is, field);
}

CaseBase CaseBase::load(const std::filesystem::path& path, FieldModel field) {
  std::ifstream in(path);
  if (!in) throw CaseBaseError("cannot open " + path.string());
  try {
    return parse(in, field);
  } catch (const CaseBaseError& e) {
    throw CaseBaseError(path.string() + ": " + e.what());
  }
}

CaseBase CaseBase::standard(FieldModel field) { return parse(standard_text(), field); }

}  // namespace teamseq::sim
