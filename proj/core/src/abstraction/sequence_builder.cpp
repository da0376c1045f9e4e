#include "teamseq/abstraction/sequence_builder.hpp"

#include <stdexcept>

namespace teamseq::abstraction {

namespace {

rel::Atom retimed(rel::Atom atom, const std::string& time_constant) {
  if (!atom.args.empty()) atom.args[0] = rel::Term::constant(time_constant);
  return atom;
}

}  // namespace

rel::RelationalSequence emit_sequence(std::span<const ActionAtomGroup> actions,
                                      const std::optional<TrialOutcome>& outcome, rel::ClassLabel label,
                                      const Roster& roster) {
  if (actions.empty()) throw std::invalid_argument("emit_sequence: no actions");
  rel::RelationalSequence seq;
  seq.label = label;
  auto time_of = [](std::size_t i) { return "time_" + std::to_string(i + 1); };

  for (std::size_t i = 0; i < actions.size(); ++i) {
    const std::string t = time_of(i);
    seq.atoms.push_back(retimed(actions[i].action, t));
    for (const auto& r : actions[i].relations) seq.atoms.push_back(retimed(r, t));
    if (i + 1 < actions.size()) seq.atoms.push_back(rel::ground("next_a", {t, time_of(i + 1)}));
  }
  if (outcome) seq.atoms.push_back(outcome->atom(time_of(actions.size() - 1)));
  for (int id : roster.attackers) seq.atoms.push_back(rel::ground("agent", {robot_constant(id)}));
  for (std::size_t k = 0; k < roster.defenders.size(); ++k)
    seq.atoms.push_back(rel::ground("opponent", {"op_" + std::to_string(k + 1)}));
  return seq;
}

}  // namespace teamseq::abstraction
