#include "teamseq/miner/background.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace teamseq::mining {

std::string_view to_string(PredicateRole role) noexcept {
  switch (role) {
    case PredicateRole::action: return "action";
    case PredicateRole::dimensional: return "dimensional";
    case PredicateRole::descriptive: return "descriptive";
    case PredicateRole::role_fact: return "role_fact";
    case PredicateRole::ignore: return "ignore";
  }
  return "?";
}

std::string_view to_string(ArgMode mode) noexcept {
  switch (mode) {
    case ArgMode::time: return "time";
    case ArgMode::entity: return "entity";
    case ArgMode::value: return "value";
  }
  return "?";
}

std::optional<std::size_t> PredicateDecl::time_position() const {
  for (std::size_t i = 0; i < modes.size(); ++i)
    if (modes[i] == ArgMode::time) return i;
  return std::nullopt;
}

void BackgroundKnowledge::declare(PredicateDecl decl) {
  const auto n_time = std::count(decl.modes.begin(), decl.modes.end(), ArgMode::time);
  const auto n_value = std::count(decl.modes.begin(), decl.modes.end(), ArgMode::value);
  auto fail = [&](const std::string& why) {
    throw BackgroundError("declaration of '" + decl.name + "': " + why);
  };
  if (decl.modes.empty()) fail("no arguments");
  switch (decl.role) {
    case PredicateRole::action:
    case PredicateRole::descriptive:
      if (n_time != 1) fail("needs exactly one time argument");
      break;
    case PredicateRole::dimensional:
      if (decl.modes.size() != 2 || n_time != 2) fail("must be (time, time)");
      if (successor()) fail("only one dimensional predicate is supported");
      break;
    case PredicateRole::role_fact:
      if (n_time != 0 || n_value != 0) fail("takes entity arguments only");
      break;
    case PredicateRole::ignore:
      break;
  }
  if (decls_.contains(decl.name)) fail("declared twice");
  auto name = decl.name;
  decls_.emplace(std::move(name), std::move(decl));
}

const PredicateDecl* BackgroundKnowledge::find(std::string_view predicate) const {
  auto it = decls_.find(predicate);
  return it == decls_.end() ? nullptr : &it->second;
}

const PredicateDecl* BackgroundKnowledge::successor() const {
  for (const auto& [_, d] : decls_)
    if (d.role == PredicateRole::dimensional) return &d;
  return nullptr;
}

void BackgroundKnowledge::check_corpus(std::span<const rel::RelationalSequence> corpus) const {
  for (const auto& seq : corpus) {
    for (const auto& a : seq.atoms) {
      const auto* d = find(a.predicate);
      if (!d) throw UndeclaredPredicate(a.predicate);
      if (d->arity() != a.arity())
        throw BackgroundError("predicate '" + a.predicate + "' declared with arity " +
                              std::to_string(d->arity()) + " but used with arity " +
                              std::to_string(a.arity()) + " in sequence " + seq.id);
    }
  }
}

BackgroundKnowledge BackgroundKnowledge::parse(std::istream& in) {
  static const std::map<std::string, PredicateRole, std::less<>> roles{
      {"action", PredicateRole::action},       {"dimensional", PredicateRole::dimensional},
      {"descriptive", PredicateRole::descriptive}, {"role_fact", PredicateRole::role_fact},
      {"ignore", PredicateRole::ignore}};
  static const std::map<std::string, ArgMode, std::less<>> modes{
      {"time", ArgMode::time}, {"entity", ArgMode::entity}, {"value", ArgMode::value}};

  BackgroundKnowledge bk;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string role_word;
    if (!(ls >> role_word)) continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    auto r = roles.find(role_word);
    if (r == roles.end()) throw BackgroundError(where() + "unknown role '" + role_word + "'");
    PredicateDecl decl;
    decl.role = r->second;
    if (!(ls >> decl.name)) throw BackgroundError(where() + "missing predicate name");
    std::string m;
    while (ls >> m) {
      auto it = modes.find(m);
      if (it == modes.end()) throw BackgroundError(where() + "unknown argument mode '" + m + "'");
      decl.modes.push_back(it->second);
    }
    try {
      bk.declare(std::move(decl));
    } catch (const BackgroundError& e) {
      throw BackgroundError(where() + e.what());
    }
  }
  return bk;
}

BackgroundKnowledge BackgroundKnowledge::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse(is);
}

BackgroundKnowledge BackgroundKnowledge::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BackgroundError("cannot open " + path.string());
  try {
    return parse(in);
  } catch (const BackgroundError& e) {
    throw BackgroundError(path.string() + ": " + e.what());
  }
}

namespace {

constexpr std::string_view kSoccerActions = R"(
action getball time entity
action catch time entity
action pass time entity entity
action dribbling time entity
action progressToGoal time entity
action aloneProgressToGoal time entity
action intercept time entity
dimensional next_a time time
)";

constexpr std::string_view kSoccerRelations = R"(
direction_view time entity value
rel_with_ball time entity value value
rel_with_team time entity value value
rel_with_opp1 time entity value value
rel_with_opp2 time entity value value
goal time
to_goal time
ball_out time
block time
out_of_time time
)";

std::string relations_as(std::string_view role) {
  std::string out;
  std::istringstream is{std::string(kSoccerRelations)};
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) out += std::string(role) + " " + line + "\n";
  return out;
}

}  // namespace

BackgroundKnowledge BackgroundKnowledge::soccer() {
  return parse(std::string(kSoccerActions) + relations_as("descriptive") +
               "role_fact agent entity\nrole_fact opponent entity\n");
}

BackgroundKnowledge BackgroundKnowledge::soccer_actions_only() {
  return parse(std::string(kSoccerActions) + relations_as("ignore") +
               "ignore agent entity\nignore opponent entity\n");
}

}  // namespace teamseq::mining
