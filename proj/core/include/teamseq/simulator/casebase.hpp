#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "teamseq/field.hpp"

namespace teamseq::sim {

/// Goal defended by the team using the case. The attackers in the
/// simulation defend yellow (at -x) and attack cyan (at +x).
enum class GoalColor : unsigned char { yellow, cyan };

std::string_view to_string(GoalColor g) noexcept;

/// Position relative to the case's ball, or the attacked goal.
struct Target {
  bool goal = false;
  Vec2 offset;
  bool operator==(const Target&) const = default;
};

enum class StepKind : unsigned char { move, grab, kick, wait };

/// One gameplay of a robot's solution.
struct Step {
  StepKind kind = StepKind::wait;
  Target target;  ///< move and kick
  bool operator==(const Step&) const = default;
};

struct Pose {
  Vec2 offset;  ///< relative to the ball
  double heading = 0.0;
  bool operator==(const Pose&) const = default;
};

/// ((R, B, G, Tm, Opp), K, A): problem description, scope, solution.
struct Case {
  std::string name;
  Pose reference;             ///< R
  Vec2 ball;                  ///< B, global
  GoalColor goal = GoalColor::yellow;  ///< G
  std::vector<Vec2> teammates;  ///< Tm, relative to the ball
  std::vector<Vec2> opponents;  ///< Opp, relative to the ball
  std::set<int> scope_ball;     ///< K: regions the ball may be in
  std::set<int> scope_opponents;  ///< K: regions counted opponents may be in
  std::vector<std::vector<Step>> solution;  ///< A: one gameplay list per robot role

  std::size_t players_involved() const;
  /// Where role `k` must stand before execution, relative to the ball: its
  /// first move target, else the reference pose for role 0.
  Vec2 adapted_offset(std::size_t role) const;
  /// Global position of the attacked goal for this case's G.
  Vec2 attacked_goal(const FieldModel& field) const;
  bool operator==(const Case&) const = default;
};

class CaseBaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws CaseBaseError when an adapted position at the case's own ball
/// lies outside the field, a region id is invalid, or more roles than
/// `team_size` are used.
void validate_case(const Case& c, const FieldModel& field, std::size_t team_size = 2);

/// Long-axis mirror, midfield mirror (defending goal swapped), and both.
std::vector<Case> generate_symmetric_cases(const Case& c, const FieldModel& field);
Case mirror_long_axis(const Case& c, const FieldModel& field);
Case mirror_midfield(const Case& c, const FieldModel& field);

/// What the coordinator sees.
struct Problem {
  Vec2 ball;
  GoalColor goal = GoalColor::yellow;
  std::vector<Vec2> teammates;  ///< own robots, global
  std::vector<Vec2> opponents;  ///< all opponents, global
};

inline constexpr double kOpponentRange = 2.0;  ///< m from the ball to count an opponent

/// Opponents within kOpponentRange of the ball.
std::vector<Vec2> counted_opponents(const Problem& p);

/// Harmonic mean of the per-feature similarities (0 if any is 0).
double harmonic_mean(const std::vector<double>& sims);
/// exp(-(d / rho)^2)
double feature_similarity(double d, double rho = 1.0);

/// Ball similarity on global positions, opponent similarity on positions
/// relative to the ball, opponents paired to minimize total distance.
double similarity(const Problem& p, const Case& c);

struct Assignment {
  std::vector<std::size_t> robot_for_role;  ///< index into Problem::teammates
  double cost = 0.0;
};

/// Minimum summed distance from robots to the adapted positions (case
/// offsets translated to the problem's ball) over all role assignments.
Assignment adaptation_cost(const Problem& p, const Case& c, const FieldModel& field);

struct Retrieved {
  const Case* c = nullptr;
  Assignment assignment;
  double similarity = 0.0;
};

class CaseBase {
 public:
  CaseBase() = default;
  explicit CaseBase(FieldModel field) : field_(field) {}

  /// Validates, then adds the case and its three symmetric variants.
  void add_with_symmetries(const Case& c);
  void add(const Case& c);

  const std::vector<Case>& cases() const noexcept { return cases_; }
  std::size_t size() const noexcept { return cases_.size(); }
  const FieldModel& field() const noexcept { return field_; }

  /// Indexed by (G, number of counted opponents); in-scope cases are ordered
  /// by players involved (desc), similarity (desc), cost (asc), name.
  std::optional<Retrieved> retrieve(const Problem& p) const;
  /// Whether the problem lies in the case's scope.
  bool in_scope(const Problem& p, const Case& c) const;

  /// Text format; see data/casebase.txt. Every parsed case is added with
  /// its symmetric variants.
  static CaseBase parse(std::istream& in, FieldModel field = {});
  static CaseBase parse(std::string_view text, FieldModel field = {});
  static CaseBase load(const std::filesystem::path& path, FieldModel field = {});
  /// Hand-coded cases parsed without symmetry expansion.
  static std::vector<Case> parse_cases(std::istream& in);
  /// The case base shipped with the library.
  static CaseBase standard(FieldModel field = {});
  static std::string_view standard_text();

 private:
  FieldModel field_;
  std::vector<Case> cases_;
  std::map<std::pair<GoalColor, std::size_t>, std::vector<std::size_t>> index_;
};

}  // namespace teamseq::sim
