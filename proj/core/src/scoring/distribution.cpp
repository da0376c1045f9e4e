#include "teamseq/scoring/distribution.hpp"

#include "teamseq/abstraction/actions.hpp"

namespace teamseq::scoring {

std::size_t ActionTable::count(rel::ClassLabel c, const std::string& action) const {
  auto it = counts.find(c);
  if (it == counts.end()) return 0;
  auto jt = it->second.find(action);
  return jt == it->second.end() ? 0 : jt->second;
}

std::size_t ActionTable::total(rel::ClassLabel c) const {
  std::size_t n = 0;
  for (const auto& a : actions) n += count(c, a);
  return n;
}

double ActionTable::percentage(rel::ClassLabel c, const std::string& action) const {
  const std::size_t t = total(c);
  return t ? 100.0 * static_cast<double>(count(c, action)) / static_cast<double>(t) : 0.0;
}

ActionTable action_distribution(std::span<const rel::RelationalSequence> corpus) {
  ActionTable table;
  for (auto k : abstraction::kAllActions) table.actions.emplace_back(abstraction::predicate_of(k));
  for (auto c : rel::kAllClasses) {
    table.sequences[c] = 0;
    for (const auto& a : table.actions) table.counts[c][a] = 0;
  }
  for (const auto& seq : corpus) {
    ++table.sequences[seq.label];
    for (const auto& atom : seq.atoms)
      if (abstraction::action_from_predicate(atom.predicate)) ++table.counts[seq.label][atom.predicate];
  }
  return table;
}

}  // namespace teamseq::scoring
