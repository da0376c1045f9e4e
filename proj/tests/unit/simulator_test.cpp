#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "teamseq/abstraction/outcome.hpp"
#include "teamseq/abstraction/trial_log.hpp"
#include "teamseq/simulator/casebase.hpp"
#include "teamseq/simulator/cbr.hpp"
#include "teamseq/simulator/experiment.hpp"
#include "teamseq/simulator/opponents.hpp"
#include "teamseq/simulator/reactive.hpp"
#include "teamseq/simulator/trial.hpp"

using namespace teamseq;
using namespace teamseq::sim;

namespace {

const FieldModel kField{};

Step move(double x, double y) { return {StepKind::move, {false, {x, y}}}; }
Step grab() { return {StepKind::grab, {}}; }

Case base_case(std::string name, Vec2 ball) {
  Case c;
  c.name = std::move(name);
  c.ball = ball;
  c.reference = {{-0.2, 0.0}, 0.0};
  c.scope_ball = {kField.region_of(ball)};
  for (int r = 0; r < kField.region_count(); ++r) c.scope_opponents.insert(r);
  return c;
}

World world_with(Vec2 ball, std::vector<std::pair<int, Vec2>> attackers, std::vector<std::pair<int, Vec2>> defenders) {
  World w;
  w.ball = ball;
  for (auto [id, p] : attackers) w.robots.push_back({id, Team::attack, p, 0.0, 0.0});
  for (auto [id, p] : defenders) w.robots.push_back({id, Team::defend, p, std::numbers::pi, 0.0});
  return w;
}

std::size_t slot(const World& w, int id) {
  for (std::size_t i = 0; i < w.robots.size(); ++i)
    if (w.robots[i].id == id) return i;
  throw std::out_of_range("robot");
}

}  // namespace

TEST(Similarity, Examples) {
  EXPECT_DOUBLE_EQ(harmonic_mean({0.5, 1.0}), 2.0 / 3.0);
  EXPECT_EQ(harmonic_mean({0.7, 0.0, 1.0}), 0.0);
  EXPECT_DOUBLE_EQ(feature_similarity(0.0), 1.0);
  EXPECT_DOUBLE_EQ(feature_similarity(1.0), std::exp(-1.0));

  Case c = base_case("c", {-1.0, 0.5});
  c.opponents = {{0.8, 0.2}};
  Problem p{c.ball, GoalColor::yellow, {{-1.2, 0.5}}, {c.ball + c.opponents[0], {2.8, 0.0}}};
  EXPECT_DOUBLE_EQ(similarity(p, c), 1.0);
  p.ball = p.ball + Vec2{1.0, 0.0};
  p.opponents[0] = p.opponents[0] + Vec2{1.0, 0.0};
  EXPECT_DOUBLE_EQ(similarity(p, c), harmonic_mean({std::exp(-1.0), 1.0}));
}

TEST(AdaptationCost, Examples) {
  Case c = base_case("two", {0.0, 0.0});
  c.solution = {{move(0.0, 1.0)}, {move(1.0, 1.0)}};
  Problem p{{0.0, 0.0}, GoalColor::yellow, {{0.0, 0.0}, {1.0, 0.0}}, {}};
  EXPECT_DOUBLE_EQ(adaptation_cost(p, c, kField).cost, 2.0);

  p.teammates = {{1.0, 1.0}, {0.0, 1.0}};
  const auto placed = adaptation_cost(p, c, kField);
  EXPECT_DOUBLE_EQ(placed.cost, 0.0);
  EXPECT_EQ(placed.robot_for_role, (std::vector<std::size_t>{1, 0}));

  Case one = base_case("one", {0.0, 0.0});
  one.solution = {{move(2.0, 1.5)}};
  Problem q{{0.0, 0.0}, GoalColor::yellow, {{-2.0, -1.5}}, {}};
  EXPECT_DOUBLE_EQ(adaptation_cost(q, one, kField).cost, 5.0);
}

TEST(Retrieve, EmptyCaseBase) {
  const CaseBase cb;
  EXPECT_FALSE(cb.retrieve(Problem{{-1.5, 0.0}, GoalColor::yellow, {{-1.8, 0.0}}, {}}).has_value());
}

TEST(Retrieve, PrefersMorePlayers) {
  Case single = base_case("a_single", {-1.5, 0.0});
  single.solution = {{move(-0.2, 0.0), grab()}};
  Case pair = base_case("b_pair", {-1.5, 0.0});
  pair.solution = {{move(-0.2, 0.0), grab()}, {move(0.5, 0.5)}};
  const Problem p{{-1.5, 0.0}, GoalColor::yellow, {{-1.7, 0.0}, {-1.0, 0.5}}, {}};

  CaseBase only;
  only.add(single);
  auto r = only.retrieve(p);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->c->name, "a_single");

  CaseBase cb;
  cb.add(single);
  cb.add(pair);
  r = cb.retrieve(p);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->c->name, "b_pair");
  EXPECT_DOUBLE_EQ(r->similarity, 1.0);
  EXPECT_DOUBLE_EQ(r->assignment.cost, 0.0);

  // Out of scope once the ball moves to another region.
  EXPECT_FALSE(cb.retrieve(Problem{{1.5, 1.5}, GoalColor::yellow, {{1.3, 1.5}}, {}}).has_value());
}

TEST(Symmetry, LongAxisMirrorOfHandCase) {
  Case c = base_case("hand", {1.0, 0.5});
  c.reference = {{-0.2, 0.1}, 0.3};
  c.teammates = {{-0.5, 0.8}};
  c.opponents = {{0.6, -0.2}};
  c.solution = {{move(-0.2, 0.1), grab(), {StepKind::kick, {true, {}}}}, {move(0.4, 0.7)}};
  const Case m = mirror_long_axis(c, kField);
  EXPECT_EQ(m.ball, (Vec2{1.0, -0.5}));
  EXPECT_EQ(m.scope_ball, (std::set<int>{kField.region_of({1.0, -0.5})}));
  EXPECT_EQ(m.teammates[0], (Vec2{-0.5, -0.8}));
  EXPECT_EQ(m.opponents[0], (Vec2{0.6, 0.2}));
  EXPECT_EQ(m.solution[1][0].target.offset, (Vec2{0.4, -0.7}));
  EXPECT_DOUBLE_EQ(m.reference.heading, -0.3);
  EXPECT_EQ(m.goal, c.goal);
  // Every region maps to its row reflection.
  for (int r : m.scope_opponents) EXPECT_TRUE(c.scope_opponents.contains(r));
}

namespace {

void expect_same_geometry(const Case& a, const Case& b) {
  EXPECT_EQ(a.ball, b.ball);
  EXPECT_EQ(a.goal, b.goal);
  EXPECT_NEAR(a.reference.heading, b.reference.heading, 1e-12);
  EXPECT_EQ(a.reference.offset, b.reference.offset);
  EXPECT_EQ(a.teammates, b.teammates);
  EXPECT_EQ(a.opponents, b.opponents);
  EXPECT_EQ(a.scope_ball, b.scope_ball);
  EXPECT_EQ(a.scope_opponents, b.scope_opponents);
  EXPECT_EQ(a.solution, b.solution);
}

}  // namespace

TEST(Symmetry, Involutions) {
  Case c = base_case("hand", {1.3, 0.5});
  c.reference = {{-0.2, 0.1}, 0.3};
  c.scope_ball = {16, 17, 22};
  c.scope_opponents = {0, 5, 11, 23};
  c.solution = {{move(-0.2, 0.1), grab()}, {move(0.4, 0.7)}};
  expect_same_geometry(mirror_long_axis(mirror_long_axis(c, kField), kField), c);
  expect_same_geometry(mirror_midfield(mirror_midfield(c, kField), kField), c);

  const Case mid = mirror_midfield(c, kField);
  EXPECT_EQ(mid.ball, (Vec2{-1.3, 0.5}));
  EXPECT_EQ(mid.goal, GoalColor::cyan);
  EXPECT_TRUE(mid.scope_ball.contains(kField.region_of({-1.3, 0.5})));
  // Region ids reflect column-wise under the midfield mirror and row-wise under the long axis.
  for (int r : c.scope_opponents) {
    const int row = r / kField.region_cols, col = r % kField.region_cols;
    EXPECT_TRUE(mid.scope_opponents.contains(row * kField.region_cols + (kField.region_cols - 1 - col)));
    EXPECT_TRUE(mirror_long_axis(c, kField).scope_opponents.contains((kField.region_rows - 1 - row) * kField.region_cols + col));
  }
}

TEST(Symmetry, AxisFixedPoint) {
  const Case c = base_case("axis", {-1.5, 0.0});
  EXPECT_EQ(mirror_long_axis(c, kField).ball, c.ball);
}

TEST(Symmetry, ShippedCaseBaseClosure) {
  std::istringstream text{std::string(CaseBase::standard_text())};
  const auto hand = CaseBase::parse_cases(text);
  const CaseBase cb = CaseBase::standard();
  EXPECT_EQ(hand.size(), 12u);
  EXPECT_EQ(cb.size(), 4 * hand.size());
  for (const auto& c : cb.cases()) EXPECT_NO_THROW(validate_case(c, cb.field())) << c.name;
  for (const auto& h : hand) {
    const auto variants = generate_symmetric_cases(h, kField);
    ASSERT_EQ(variants.size(), 3u);
    expect_same_geometry(variants[0], mirror_long_axis(h, kField));
    expect_same_geometry(variants[1], mirror_midfield(h, kField));
    expect_same_geometry(variants[2], mirror_midfield(mirror_long_axis(h, kField), kField));
  }
}

TEST(Symmetry, InvalidCaseRejected) {
  Case c = base_case("off_field", {2.8, 0.0});
  c.solution = {{move(1.0, 0.0)}};
  EXPECT_THROW(validate_case(c, kField), CaseBaseError);
  Case crowd = base_case("crowd", {0.0, 0.0});
  crowd.solution = {{move(0.1, 0.0)}, {move(0.2, 0.0)}, {move(0.3, 0.0)}};
  EXPECT_THROW(validate_case(crowd, kField), CaseBaseError);
}

TEST(Reactive, RoleSplitOnFreeBall) {
  const World w = world_with({0.0, 0.0}, {{1, {-0.3, 0.0}}, {2, {-1.0, 0.8}}}, {});
  ReactiveMemory mem;
  Rng rng(1);
  std::vector<Intent> in(w.robots.size());
  step_reactive(w, mem, rng, in);
  EXPECT_EQ(in[slot(w, 1)].kind, IntentKind::grab);
  EXPECT_EQ(in[slot(w, 2)].kind, IntentKind::move_to);
}

TEST(Reactive, HolderNearGoalShoots) {
  World w = world_with({2.02, 0.0}, {{1, {1.9, 0.0}}, {2, {0.0, 1.0}}}, {{4, {-2.0, 1.5}}});
  w.holder = 1;
  ReactiveMemory mem;
  Rng rng(1);
  const Intent in = reactive_intent(w, 1, mem, rng);
  EXPECT_EQ(in.kind, IntentKind::kick_toward);
  EXPECT_EQ(in.target, kField.attacked_goal_center());
}

TEST(Reactive, BlockedHolderTurnsOrDribbles) {
  World w = world_with({0.12, 0.0}, {{1, {0.0, 0.0}}}, {{4, {0.4, 0.05}}});
  w.holder = 1;
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    ReactiveMemory mem;
    Rng rng(seed);
    const Intent in = reactive_intent(w, 1, mem, rng);
    const double bearing = (in.target - w.robot(1).pos).bearing();
    // Either way the new direction leaves the straight line to goal.
    EXPECT_GT(std::fabs(bearing), 0.5) << seed;
    EXPECT_LT(in.target.y, 0.0) << "turns away from the opponent's side";
  }
}

TEST(Opponents, WaitsOnRegionBorder) {
  World w = world_with({-1.0, 0.5}, {{1, {-1.3, 0.5}}}, {{3, {2.75, 0.0}}, {4, {1.0, 0.0}}});
  std::vector<Intent> in(w.robots.size());
  step_opponents(OpponentConfig::dg, w, in);
  const Rect region = home_region(OpponentConfig::dg, 4, kField);
  EXPECT_EQ(in[slot(w, 4)].kind, IntentKind::move_to);
  EXPECT_EQ(in[slot(w, 4)].target, region.clamp(w.ball));

  w.robot(4).pos = region.clamp(w.ball);
  step_opponents(OpponentConfig::dg, w, in);
  EXPECT_EQ(in[slot(w, 4)].kind, IntentKind::wait_sync);
  EXPECT_EQ(in[slot(w, 4)].target, w.ball);
  EXPECT_EQ(in[slot(w, 1)].kind, IntentKind::idle);
}

TEST(Opponents, EngagesAndClears) {
  World w = world_with({1.0, 1.0}, {{1, {0.0, 0.0}}}, {{3, {2.75, 0.0}}, {4, {1.5, 1.0}}});
  std::vector<Intent> in(w.robots.size());
  step_opponents(OpponentConfig::dg, w, in);
  EXPECT_EQ(in[slot(w, 4)].kind, IntentKind::grab);
  EXPECT_NE(in[slot(w, 3)].kind, IntentKind::grab);

  w.holder = 4;
  step_opponents(OpponentConfig::dg, w, in);
  EXPECT_EQ(in[slot(w, 4)].kind, IntentKind::kick_toward);
  EXPECT_EQ(in[slot(w, 4)].target.x, kField.bounds().x_min);
}

TEST(Opponents, TwoDefendersOverlap) {
  const Rect a = home_region(OpponentConfig::two_defenders, 3, kField);
  const Rect b = home_region(OpponentConfig::two_defenders, 4, kField);
  const Vec2 ball{0.8, 0.3};
  ASSERT_TRUE(a.contains(ball) && b.contains(ball));
  const World w = world_with(ball, {{1, {-1.0, 0.0}}}, {{3, {0.0, 0.5}}, {4, {1.5, -0.5}}});
  std::vector<Intent> in(w.robots.size());
  step_opponents(OpponentConfig::two_defenders, w, in);
  EXPECT_EQ(in[slot(w, 3)].kind, IntentKind::grab);
  EXPECT_EQ(in[slot(w, 4)].kind, IntentKind::grab);
}

TEST(Opponents, FieldDefendersStayOutOfTheBox) {
  for (auto cfg : {OpponentConfig::dg, OpponentConfig::two_defenders})
    for (int id : {3, 4}) {
      if (cfg == OpponentConfig::dg && id == 3) continue;
      const Rect r = home_region(cfg, id, kField);
      EXPECT_LT(r.x_max, kField.penalty_box.x_min);
      EXPECT_FALSE(kField.penalty_box.contains(opponent_start(cfg, id)));
    }
}

TEST(Cbr, CloserRobotCoordinates) {
  const CaseBase cb = CaseBase::standard();
  for (int closer : {1, 2}) {
    const Vec2 near{-1.8, 0.0}, far{-2.2, 0.9};
    const World w = world_with({-1.5, 0.0}, {{1, closer == 1 ? near : far}, {2, closer == 1 ? far : near}},
                               {{3, {2.75, 0.0}}, {4, {1.0, 0.0}}});
    CoordinationState s;
    Rng rng(3);
    std::vector<Intent> in(w.robots.size());
    step_cbr(w, cb, s, rng, in);
    ASSERT_TRUE(s.coordinator);
    EXPECT_EQ(*s.coordinator, closer);
    EXPECT_EQ(s.phase, Phase::positioning);
    EXPECT_TRUE(s.active);
  }
}

TEST(Cbr, AbortWhenBallLeavesScope) {
  const CaseBase cb = CaseBase::standard();
  World w = world_with({-1.5, 0.0}, {{1, {-1.8, 0.0}}, {2, {-2.2, 0.9}}}, {{3, {2.75, 0.0}}, {4, {1.0, 0.0}}});
  CoordinationState s;
  Rng rng(3);
  std::vector<Intent> in(w.robots.size());
  step_cbr(w, cb, s, rng, in);
  ASSERT_EQ(s.phase, Phase::positioning);
  w.ball = {1.5, -1.5};
  ASSERT_FALSE(s.active->scope_ball.contains(kField.region_of(w.ball)));
  step_cbr(w, cb, s, rng, in);
  EXPECT_EQ(s.phase, Phase::aborted);
  EXPECT_EQ(s.cases_aborted, 1u);
  EXPECT_FALSE(s.coordinator);
  ASSERT_FALSE(s.pending_messages.empty());
  EXPECT_EQ(s.pending_messages[0].rfind("abort", 0), 0u);
}

TEST(Cbr, ReportsWhenAllRolesDone) {
  const CaseBase cb = CaseBase::standard();
  const World w = world_with({-1.5, 0.0}, {{1, {-1.7, 0.0}}, {2, {-2.2, 0.9}}}, {{3, {2.75, 0.0}}, {4, {1.0, 0.0}}});
  Case c = base_case("finishing", {-1.5, 0.0});
  c.solution = {{move(-0.2, 0.0)}, {move(-0.7, 0.9)}};
  CoordinationState s;
  s.phase = Phase::executing;
  s.coordinator = 1;
  s.active = c;
  s.anchor = c.ball;
  s.robot_for_role = {1, 2};
  s.next_step = {1, 1};
  s.done = {false, false};
  s.positioned = true;
  s.phase_start = s.step_start = 0.0;
  Rng rng(1);
  std::vector<Intent> in(w.robots.size());
  step_cbr(w, cb, s, rng, in);
  EXPECT_EQ(s.phase, Phase::reporting);
  EXPECT_EQ(s.cases_completed, 1u);
  EXPECT_FALSE(s.coordinator);
  step_cbr(w, cb, s, rng, in);
  EXPECT_NE(s.phase, Phase::reporting);
  EXPECT_TRUE(s.coordinator);
}

TEST(World, ZeroNoiseShotScores) {
  World w = world_with({2.62, 0.0}, {{1, {2.5, 0.0}}, {2, {0.0, 1.0}}}, {{3, {-2.0, 1.5}}, {4, {-2.0, -1.5}}});
  w.holder = 1;
  Kinematics kin;
  kin.kick_angle_noise_deg = 0.0;
  kin.kick_strength_noise = 0.0;
  Rng rng(5);
  abstraction::TrialLog log;
  log.frames.push_back(w.snapshot());
  std::vector<Intent> in(w.robots.size());
  in[slot(w, 1)] = Intent::kick_toward(kField.attacked_goal_center());
  for (int tick = 0; tick < 40 && kField.inside(w.ball); ++tick) {
    step_world(w, in, kin, rng);
    log.frames.push_back(w.snapshot());
    EXPECT_NEAR(w.ball.y, 0.0, 1e-12);
  }
  ASSERT_FALSE(kField.inside(w.ball));
  EXPECT_EQ(abstraction::classify_outcome(log).kind, abstraction::OutcomeKind::goal);
}

TEST(World, FrictionOnlySlowsFreeBall) {
  World w = world_with({0.0, 0.0}, {{1, {-2.0, 0.0}}}, {});
  w.ball_vel = {1.0, 0.3};
  Kinematics kin;
  Rng rng(1);
  std::vector<Intent> in(w.robots.size());
  double prev = w.ball_vel.norm();
  for (int i = 0; i < 60; ++i) {
    step_world(w, in, kin, rng);
    EXPECT_LE(w.ball_vel.norm(), prev + 1e-12);
    prev = w.ball_vel.norm();
  }
  EXPECT_EQ(prev, 0.0);
}

TEST(Trial, IdleTeamsRunOutOfTime) {
  SimConfig cfg;
  cfg.timeout = 3.0;
  cfg.idle_attackers = cfg.idle_defenders = true;
  const auto log = run_trial(cfg);
  ASSERT_TRUE(log.trailer);
  EXPECT_EQ(log.trailer->outcome, "out_of_time");
  EXPECT_DOUBLE_EQ(log.trailer->t, 3.0);
  EXPECT_EQ(log.frames.size(), 61u);
}

TEST(Trial, SameSeedSameLog) {
  const CaseBase cb = CaseBase::standard();
  for (auto approach : {Approach::cbr, Approach::rea}) {
    SimConfig cfg;
    cfg.scenario = 2;
    cfg.approach = approach;
    cfg.seed = 99;
    cfg.timeout = 20.0;
    EXPECT_EQ(abstraction::to_jsonl(run_trial(cfg, &cb)), abstraction::to_jsonl(run_trial(cfg, &cb)));
  }
}

TEST(Trial, ConfigErrors) {
  SimConfig cfg;
  cfg.approach = Approach::cbr;
  EXPECT_THROW(run_trial(cfg), std::invalid_argument);
  cfg.approach = Approach::rea;
  cfg.scenario = 5;
  EXPECT_THROW(run_trial(cfg), std::invalid_argument);
  cfg.scenario = 1;
  cfg.timeout = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.timeout = 10.0;
  cfg.kinematics.grab_failure = 1.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

// Physical and coordination invariants over a batch of simulated trials.
TEST(Trial, FrameInvariants) {
  const CaseBase cb = CaseBase::standard();
  std::size_t trials = 0;
  for (auto cfgk : {OpponentConfig::dg, OpponentConfig::two_defenders})
    for (int scenario = 1; scenario <= 4; ++scenario)
      for (auto approach : {Approach::cbr, Approach::rea}) {
        SimConfig cfg;
        cfg.scenario = scenario;
        cfg.opponents = cfgk;
        cfg.approach = approach;
        cfg.seed = derive_seed(11, static_cast<std::uint64_t>(scenario), static_cast<std::uint64_t>(approach));
        cfg.timeout = 30.0;
        TrialStats stats;
        const auto log = run_trial(cfg, &cb, &stats);
        ++trials;
        ASSERT_NO_THROW(abstraction::validate(log));
        ASSERT_TRUE(log.trailer);
        EXPECT_EQ(stats.cases_started >= stats.cases_completed + stats.cases_aborted, true);
        if (approach == Approach::rea) EXPECT_EQ(stats.cases_started, 0u);
        for (std::size_t i = 0; i < log.frames.size(); ++i) {
          const auto& f = log.frames[i];
          if (f.possession) {
            EXPECT_LE(distance(f.robot(*f.possession).pos(), f.ball.pos()), cfg.kinematics.grab_radius + 1e-3);
          }
          for (const auto& r : f.robots) {
            if (r.team != abstraction::Team::defend) continue;
            if (cfgk == OpponentConfig::dg && r.id == 3) continue;  // goalie
            EXPECT_FALSE(kField.penalty_box.interior(r.pos())) << "defender " << r.id << " at t=" << f.t;
          }
          if (i + 1 < log.frames.size()) EXPECT_TRUE(kField.inside(f.ball.pos()));
        }
      }
  EXPECT_EQ(trials, 16u);
}

TEST(Experiment, ManifestAndLogs) {
  const auto dir = std::filesystem::temp_directory_path() / "teamseq_experiment_test";
  std::filesystem::remove_all(dir);
  const CaseBase cb = CaseBase::standard();
  ExperimentMatrix one;
  one.scenarios = {1};
  one.approaches = {Approach::rea};
  one.trials_per_cell = 1;
  one.timeout = 2.0;
  auto rows = run_experiment(one, dir / "one", cb);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(std::filesystem::exists(dir / "one" / kManifestName));
  EXPECT_TRUE(std::filesystem::exists(dir / "one" / rows[0].path));
  EXPECT_EQ(rows[0].path, "dg/s1_rea/trial_0000.jsonl");

  ExperimentMatrix m;
  m.configs = {OpponentConfig::dg, OpponentConfig::two_defenders};
  m.scenarios = {1, 3};
  m.trials_per_cell = 2;
  m.timeout = 2.0;
  m.seed = 4;
  EXPECT_EQ(cells_of(m).size(), 8u);
  rows = run_experiment(m, dir / "a", cb);
  EXPECT_EQ(rows.size(), 16u);
  std::set<std::uint64_t> seeds;
  for (const auto& r : rows) seeds.insert(r.seed);
  EXPECT_EQ(seeds.size(), rows.size());
  EXPECT_EQ(load_manifest(dir / "a" / kManifestName), rows);

  run_experiment(m, dir / "b", cb);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(dir / "a" / kManifestName), slurp(dir / "b" / kManifestName));
  for (const auto& r : rows) EXPECT_EQ(slurp(dir / "a" / r.path), slurp(dir / "b" / r.path)) << r.path;
  std::filesystem::remove_all(dir);
}

TEST(Experiment, FiftyTrialsTimesEightCells) {
  ExperimentMatrix m;
  m.trials_per_cell = 50;
  EXPECT_EQ(cells_of(m).size() * m.trials_per_cell, 400u);
  const auto cells = cells_of(m);
  EXPECT_EQ(trial_path(cells[0], 49), "dg/s1_cbr/trial_0049.jsonl");
  EXPECT_EQ(trial_path(cells[7], 0), "dg/s4_rea/trial_0000.jsonl");
}

TEST(Experiment, InvalidMatrixAndManifest) {
  ExperimentMatrix m;
  m.trials_per_cell = 0;
  EXPECT_THROW(m.validate(), std::invalid_argument);
  m.trials_per_cell = 1;
  m.scenarios.clear();
  EXPECT_THROW(m.validate(), std::invalid_argument);
  std::istringstream bad("cell,scenario\n0,x\n");
  EXPECT_THROW(read_manifest(bad), ManifestError);
}
