#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "teamseq/field.hpp"

namespace teamseq::abstraction {

enum class Team : unsigned char { attack, defend };

struct RobotState {
  int id = 0;
  Team team = Team::attack;
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;

  Vec2 pos() const { return {x, y}; }
  bool operator==(const RobotState&) const = default;
};

struct BallState {
  double x = 0.0;
  double y = 0.0;
  double vx = 0.0;
  double vy = 0.0;

  Vec2 pos() const { return {x, y}; }
  Vec2 vel() const { return {vx, vy}; }
  bool operator==(const BallState&) const = default;
};

struct Frame {
  double t = 0.0;
  std::vector<RobotState> robots;
  BallState ball;
  std::optional<int> possession;

  /// Throws std::out_of_range for an unknown id.
  const RobotState& robot(int id) const;
  bool operator==(const Frame&) const = default;
};

/// Final line of a log: how and when the trial ended.
struct LogTrailer {
  std::string outcome;
  double t = 0.0;
  bool operator==(const LogTrailer&) const = default;
};

struct TrialLog {
  std::vector<Frame> frames;
  std::optional<LogTrailer> trailer;
  bool operator==(const TrialLog&) const = default;
};

class LogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Robot ids per team, ascending.
struct Roster {
  std::vector<int> attackers{1, 2};
  std::vector<int> defenders{3, 4};
};

Roster roster_of(const Frame& frame);

/// Rejects logs with non-increasing timestamps, robot ids below 1, a possession id that names
/// no robot, or inconsistent robot sets between frames.
void validate(const TrialLog& log);

/// One JSON object per line; numbers are rounded to 4 decimals.
void write_jsonl(std::ostream& out, const TrialLog& log);
std::string to_jsonl(const TrialLog& log);
/// Parses and validates. Errors name the 1-based line.
TrialLog read_jsonl(std::istream& in);
TrialLog parse_jsonl(const std::string& text);

}  // namespace teamseq::abstraction
