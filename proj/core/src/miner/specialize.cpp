#include "teamseq/miner/specialize.hpp"

#include <algorithm>
#include <functional>

namespace teamseq::mining {

Vocabulary Vocabulary::from_corpus(std::span<const rel::RelationalSequence> corpus,
                                   const BackgroundKnowledge& bk) {
  Vocabulary v;
  std::map<std::pair<std::string, std::size_t>, std::set<std::string>> values;
  for (const auto& seq : corpus) {
    for (const auto& a : seq.atoms) {
      v.predicates.insert(a.predicate);
      const auto* d = bk.find(a.predicate);
      if (!d || d->arity() != a.arity()) continue;
      for (std::size_t i = 0; i < a.arity(); ++i)
        if (d->modes[i] == ArgMode::value && a.args[i].is_constant())
          values[{a.predicate, i}].insert(a.args[i].name);
    }
  }
  for (auto& [slot, names] : values) v.values[slot].assign(names.begin(), names.end());
  return v;
}

PatternShape PatternShape::of(const rel::Pattern& pattern, const BackgroundKnowledge& bk) {
  PatternShape s;
  std::map<std::string, std::string> successor;
  auto add_unique = [](std::vector<std::string>& xs, const std::string& x) {
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  };
  for (const auto& a : pattern.atoms) {
    const auto* d = bk.find(a.predicate);
    if (!d) throw UndeclaredPredicate(a.predicate);
    for (std::size_t i = 0; i < a.arity() && i < d->arity(); ++i) {
      if (!a.args[i].is_variable()) continue;
      if (d->modes[i] == ArgMode::time) add_unique(s.time_vars, a.args[i].name);
      if (d->modes[i] == ArgMode::entity) add_unique(s.entity_vars, a.args[i].name);
    }
    if (d->role == PredicateRole::action) {
      if (auto tp = d->time_position()) s.action_times.insert(a.args[*tp].name);
    }
    if (d->role == PredicateRole::dimensional && a.arity() == 2)
      successor[a.args[0].name] = a.args[1].name;
  }
  s.variable_count = rel::variables_of(pattern.atoms).size();
  if (!s.time_vars.empty()) {
    std::string t = s.time_vars.front();
    std::set<std::string> seen{t};
    for (auto it = successor.find(t); it != successor.end(); it = successor.find(t)) {
      t = it->second;
      if (!seen.insert(t).second) break;
    }
    s.chain_end = t;
    s.dangling = !s.action_times.contains(t);
  }
  return s;
}

namespace {

class ChildBuilder {
 public:
  ChildBuilder(const rel::Pattern& parent, const Vocabulary& vocab)
      : parent_(parent), vocab_(vocab) {
    for (const auto& v : rel::variables_of(parent.atoms)) used_.insert(v);
  }

  // Enumerates every atom of `decl` with the time argument fixed to `time`
  // (or fresh when empty), entity arguments from `entities` plus fresh ones
  // when `fresh_entities`, value arguments from the vocabulary or private.
  void enumerate(const PredicateDecl& decl, const std::string& time, const std::vector<std::string>& entities,
                 bool fresh_entities, std::vector<rel::Pattern>& out) {
    std::vector<rel::Term> args(decl.arity());
    std::size_t fresh = 0;  // fresh names handed out for this atom
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t fresh_entity_count) {
      if (pos == decl.arity()) {
        rel::Atom atom(decl.name, args);
        if (std::find(parent_.atoms.begin(), parent_.atoms.end(), atom) != parent_.atoms.end()) return;
        rel::Pattern child = parent_;
        child.atoms.push_back(std::move(atom));
        out.push_back(std::move(child));
        return;
      }
      switch (decl.modes[pos]) {
        case ArgMode::time: {
          const std::size_t saved = fresh;
          args[pos] = rel::Term::variable(time.empty() ? fresh_name(fresh++) : time);
          rec(pos + 1, fresh_entity_count);
          fresh = saved;
          return;
        }
        case ArgMode::entity: {
          for (const auto& e : entities) {
            args[pos] = rel::Term::variable(e);
            rec(pos + 1, fresh_entity_count);
          }
          if (!fresh_entities) return;
          // Reuse one of this atom's fresh entities, or open a new one.
          for (std::size_t k = 0; k < fresh_entity_count; ++k) {
            args[pos] = rel::Term::variable(fresh_entity_names_[k]);
            rec(pos + 1, fresh_entity_count);
          }
          fresh_entity_names_.push_back(fresh_name(fresh++));
          args[pos] = rel::Term::variable(fresh_entity_names_.back());
          rec(pos + 1, fresh_entity_count + 1);
          fresh_entity_names_.pop_back();
          --fresh;
          return;
        }
        case ArgMode::value: {
          auto it = vocab_.values.find({decl.name, pos});
          if (it != vocab_.values.end()) {
            for (const auto& c : it->second) {
              args[pos] = rel::Term::constant(c);
              rec(pos + 1, fresh_entity_count);
            }
          }
          const std::size_t saved = fresh;
          args[pos] = rel::Term::variable(fresh_name(fresh++));
          rec(pos + 1, fresh_entity_count);
          fresh = saved;
          return;
        }
      }
    };
    fresh_entity_names_.clear();
    rec(0, 0);
  }

  void add(rel::Atom atom, std::vector<rel::Pattern>& out) {
    if (std::find(parent_.atoms.begin(), parent_.atoms.end(), atom) != parent_.atoms.end()) return;
    rel::Pattern child = parent_;
    child.atoms.push_back(std::move(atom));
    out.push_back(std::move(child));
  }

  // The k-th unused name in A, B, ..., Z, A1, ... order.
  std::string fresh_name(std::size_t k) {
    while (names_.size() <= k) {
      std::string n;
      do n = rel::display_variable_name(next_index_++);
      while (used_.contains(n));
      names_.push_back(n);
    }
    return names_[k];
  }

 private:
  const rel::Pattern& parent_;
  const Vocabulary& vocab_;
  std::set<std::string> used_;
  std::vector<std::string> names_;
  std::vector<std::string> fresh_entity_names_;
  std::size_t next_index_ = 0;
};

}  // namespace

std::vector<rel::Pattern> specialize(const rel::Pattern& pattern, const BackgroundKnowledge& bk,
                                     const Vocabulary& vocabulary) {
  std::vector<rel::Pattern> out;
  const PatternShape shape = PatternShape::of(pattern, bk);
  ChildBuilder build(pattern, vocabulary);

  auto declared = [&](PredicateRole role) {
    std::vector<const PredicateDecl*> ds;
    for (const auto& [name, d] : bk.declarations())
      if (d.role == role && vocabulary.predicates.contains(name)) ds.push_back(&d);
    return ds;
  };

  if (pattern.empty()) {
    for (const auto* d : declared(PredicateRole::action)) build.enumerate(*d, "", {}, true, out);
    return out;
  }
  if (shape.dangling) {
    for (const auto* d : declared(PredicateRole::action))
      build.enumerate(*d, *shape.chain_end, shape.entity_vars, true, out);
    return out;
  }

  if (const auto* succ = bk.successor(); succ && vocabulary.predicates.contains(succ->name) && shape.chain_end)
    build.add(rel::Atom(succ->name, {rel::Term::variable(*shape.chain_end), rel::Term::variable(build.fresh_name(0))}),
              out);

  for (const auto* d : declared(PredicateRole::descriptive))
    for (const auto& t : shape.time_vars)
      if (shape.action_times.contains(t)) build.enumerate(*d, t, shape.entity_vars, false, out);

  for (const auto* d : declared(PredicateRole::role_fact)) build.enumerate(*d, "", shape.entity_vars, false, out);
  return out;
}

}  // namespace teamseq::mining
