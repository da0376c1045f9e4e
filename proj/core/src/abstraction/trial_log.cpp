#include "teamseq/abstraction/trial_log.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace teamseq::abstraction {

using nlohmann::json;

const RobotState& Frame::robot(int id) const {
  for (const auto& r : robots)
    if (r.id == id) return r;
  throw std::out_of_range("no robot with id " + std::to_string(id));
}

Roster roster_of(const Frame& frame) {
  Roster r{{}, {}};
  for (const auto& rs : frame.robots) (rs.team == Team::attack ? r.attackers : r.defenders).push_back(rs.id);
  std::sort(r.attackers.begin(), r.attackers.end());
  std::sort(r.defenders.begin(), r.defenders.end());
  return r;
}

void validate(const TrialLog& log) {
  for (std::size_t i = 0; i < log.frames.size(); ++i) {
    const Frame& f = log.frames[i];
    if (i > 0 && !(f.t > log.frames[i - 1].t))
      throw LogError("non-monotone timestamp at frame " + std::to_string(i));
    for (const auto& r : f.robots)
      if (r.id < 1) throw LogError("robot id " + std::to_string(r.id) + " at frame " + std::to_string(i) + " (ids start at 1)");
    if (f.possession) {
      const bool known = std::any_of(f.robots.begin(), f.robots.end(),
                                     [&](const RobotState& r) { return r.id == *f.possession; });
      if (!known) throw LogError("possession by unknown robot at frame " + std::to_string(i));
    }
    if (i > 0) {
      const auto& prev = log.frames[i - 1].robots;
      const bool same_set =
          prev.size() == f.robots.size() &&
          std::equal(prev.begin(), prev.end(), f.robots.begin(),
                     [](const RobotState& a, const RobotState& b) { return a.id == b.id && a.team == b.team; });
      if (!same_set) throw LogError("robot set changes at frame " + std::to_string(i));
    }
  }
}

namespace {

double round4(double v) {
  const double r = std::round(v * 1e4) / 1e4;
  return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

json frame_to_json(const Frame& f) {
  json robots = json::array();
  for (const auto& r : f.robots) {
    robots.push_back({{"id", r.id},
                      {"team", r.team == Team::attack ? "attack" : "defend"},
                      {"x", round4(r.x)},
                      {"y", round4(r.y)},
                      {"heading", round4(r.heading)}});
  }
  json j;
  j["t"] = round4(f.t);
  j["robots"] = std::move(robots);
  j["ball"] = {{"x", round4(f.ball.x)}, {"y", round4(f.ball.y)}, {"vx", round4(f.ball.vx)},
               {"vy", round4(f.ball.vy)}};
  j["poss"] = f.possession ? json(*f.possession) : json(nullptr);
  return j;
}

Frame frame_from_json(const json& j) {
  Frame f;
  f.t = j.at("t").get<double>();
  for (const auto& r : j.at("robots")) {
    RobotState rs;
    rs.id = r.at("id").get<int>();
    const auto team = r.at("team").get<std::string>();
    if (team == "attack") rs.team = Team::attack;
    else if (team == "defend") rs.team = Team::defend;
    else throw LogError("unknown team '" + team + "'");
    rs.x = r.at("x").get<double>();
    rs.y = r.at("y").get<double>();
    rs.heading = r.at("heading").get<double>();
    f.robots.push_back(rs);
  }
  const auto& b = j.at("ball");
  f.ball = {b.at("x").get<double>(), b.at("y").get<double>(), b.at("vx").get<double>(),
            b.at("vy").get<double>()};
  const auto& p = j.at("poss");
  if (!p.is_null()) f.possession = p.get<int>();
  return f;
}

}  // namespace

void write_jsonl(std::ostream& out, const TrialLog& log) {
  for (const auto& f : log.frames) out << frame_to_json(f).dump() << '\n';
  if (log.trailer) {
    json j;
    j["outcome"] = log.trailer->outcome;
    j["t"] = round4(log.trailer->t);
    out << j.dump() << '\n';
  }
}

std::string to_jsonl(const TrialLog& log) {
  std::ostringstream os;
  write_jsonl(os, log);
  return os.str();
}

TrialLog read_jsonl(std::istream& in) {
  TrialLog log;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (log.trailer) throw LogError("line " + std::to_string(lineno) + ": data after outcome line");
    try {
      const json j = json::parse(line);
      if (j.contains("outcome")) {
        log.trailer = LogTrailer{j.at("outcome").get<std::string>(), j.at("t").get<double>()};
      } else {
        log.frames.push_back(frame_from_json(j));
      }
    } catch (const json::exception& e) {
      throw LogError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const LogError& e) {
      throw LogError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  validate(log);
  return log;
}

TrialLog parse_jsonl(const std::string& text) {
  std::istringstream is(text);
  return read_jsonl(is);
}

}  // namespace teamseq::abstraction
