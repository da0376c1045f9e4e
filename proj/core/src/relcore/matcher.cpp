#include "teamseq/relcore/matcher.hpp"

#include <algorithm>

namespace teamseq::rel {

namespace {

std::string term_key(const Term& t) {
  std::string k;
  k.reserve(t.name.size() + 1);
  k += t.is_variable() ? 'V' : 'c';
  k += t.name;
  return k;
}

}  // namespace

SymbolId SymbolTable::intern_term(const Term& term) {
  auto [it, inserted] = term_ids_.try_emplace(term_key(term), static_cast<SymbolId>(terms_.size()));
  if (inserted) terms_.push_back(term);
  return it->second;
}

SymbolId SymbolTable::intern_predicate(const std::string& name) {
  auto [it, inserted] =
      predicate_ids_.try_emplace(name, static_cast<SymbolId>(predicate_ids_.size()));
  return it->second;
}

std::optional<SymbolId> SymbolTable::find_predicate(const std::string& name) const {
  auto it = predicate_ids_.find(name);
  if (it == predicate_ids_.end()) return std::nullopt;
  return it->second;
}

IndexedAtoms::IndexedAtoms(std::span<const Atom> atoms, SymbolTable& symbols) {
  entries_.reserve(atoms.size());
  for (const auto& a : atoms) {
    Entry e{symbols.intern_predicate(a.predicate), {}};
    e.args.reserve(a.args.size());
    for (const auto& t : a.args) e.args.push_back(symbols.intern_term(t));
    const bool duplicate = std::any_of(entries_.begin(), entries_.end(), [&](const Entry& o) {
      return o.predicate == e.predicate && o.args == e.args;
    });
    if (duplicate) continue;
    const auto idx = static_cast<std::uint32_t>(entries_.size());
    by_pred_[e.predicate].push_back(idx);
    if (!e.args.empty()) by_pred_first_[key(e.predicate, e.args[0])].push_back(idx);
    entries_.push_back(std::move(e));
  }
}

std::span<const std::uint32_t> IndexedAtoms::by_predicate(SymbolId predicate) const {
  auto it = by_pred_.find(predicate);
  if (it == by_pred_.end()) return {};
  return it->second;
}

std::span<const std::uint32_t> IndexedAtoms::by_predicate_first(SymbolId predicate,
                                                                SymbolId first) const {
  auto it = by_pred_first_.find(key(predicate, first));
  if (it == by_pred_first_.end()) return {};
  return it->second;
}

CompiledPattern::CompiledPattern(std::span<const Atom> atoms, SymbolTable& symbols) {
  for (const auto& a : atoms) {
    Entry e{symbols.intern_predicate(a.predicate), {}};
    e.args.reserve(a.args.size());
    for (const auto& t : a.args) {
      if (t.is_variable()) {
        auto it = std::find(variables_.begin(), variables_.end(), t.name);
        std::size_t idx = static_cast<std::size_t>(it - variables_.begin());
        if (it == variables_.end()) variables_.push_back(t.name);
        e.args.push_back(-static_cast<std::int32_t>(idx) - 1);
      } else {
        e.args.push_back(symbols.intern_term(t));
      }
    }
    const bool duplicate = std::any_of(entries_.begin(), entries_.end(), [&](const Entry& o) {
      return o.predicate == e.predicate && o.args == e.args;
    });
    if (!duplicate) entries_.push_back(std::move(e));
  }
}

namespace {

constexpr SymbolId kUnbound = -1;

class Search {
 public:
  Search(const CompiledPattern& pattern, const IndexedAtoms& target)
      : pattern_(pattern), target_(target), binding_(pattern.variable_count(), kUnbound) {
    plan();
  }

  // Calls visit for every solution; stops when visit returns false.
  template <class F>
  void run(F&& visit) {
    if (infeasible_) return;
    stop_ = false;
    step(0, visit);
  }

 private:
  // Greedy static order: start from the most selective atom, then prefer
  // atoms whose arguments are already determined.
  void plan() {
    const auto& entries = pattern_.entries();
    std::vector<bool> used(entries.size(), false);
    std::vector<bool> bound(pattern_.variable_count(), false);
    order_.reserve(entries.size());
    for (std::size_t step = 0; step < entries.size(); ++step) {
      std::size_t best = entries.size();
      long best_fixed = -1;
      std::size_t best_cands = 0;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (used[i]) continue;
        const auto& e = entries[i];
        const std::size_t cands = target_.by_predicate(e.predicate).size();
        if (cands == 0) {
          infeasible_ = true;
          return;
        }
        long fixed = 0;
        for (auto s : e.args)
          if (!CompiledPattern::is_var(s) || bound[CompiledPattern::var_index(s)]) ++fixed;
        if (best == entries.size() || fixed > best_fixed ||
            (fixed == best_fixed && cands < best_cands)) {
          best = i;
          best_fixed = fixed;
          best_cands = cands;
        }
      }
      used[best] = true;
      for (auto s : entries[best].args)
        if (CompiledPattern::is_var(s)) bound[CompiledPattern::var_index(s)] = true;
      order_.push_back(best);
    }
  }

  SymbolId resolve(std::int32_t slot) const {
    return CompiledPattern::is_var(slot) ? binding_[CompiledPattern::var_index(slot)] : slot;
  }

  template <class F>
  void step(std::size_t depth, F& visit) {
    if (depth == order_.size()) {
      if (!visit(binding_)) stop_ = true;
      return;
    }
    const auto& e = pattern_.entries()[order_[depth]];
    std::span<const std::uint32_t> candidates;
    const SymbolId first = e.args.empty() ? kUnbound : resolve(e.args[0]);
    candidates = first != kUnbound ? target_.by_predicate_first(e.predicate, first)
                                   : target_.by_predicate(e.predicate);
    for (auto idx : candidates) {
      const auto& t = target_.entries()[idx];
      if (t.args.size() != e.args.size()) continue;
      const std::size_t mark = trail_.size();
      bool ok = true;
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        const auto slot = e.args[k];
        if (!CompiledPattern::is_var(slot)) {
          if (slot != t.args[k]) { ok = false; break; }
          continue;
        }
        const auto v = CompiledPattern::var_index(slot);
        if (binding_[v] == kUnbound) {
          binding_[v] = t.args[k];
          trail_.push_back(v);
        } else if (binding_[v] != t.args[k]) {
          ok = false;
          break;
        }
      }
      if (ok) step(depth + 1, visit);
      while (trail_.size() > mark) {
        binding_[trail_.back()] = kUnbound;
        trail_.pop_back();
      }
      if (stop_) return;
    }
  }

  const CompiledPattern& pattern_;
  const IndexedAtoms& target_;
  Matcher::Binding binding_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> trail_;
  bool infeasible_ = false;
  bool stop_ = false;
};

}  // namespace

bool Matcher::exists(const CompiledPattern& pattern, const IndexedAtoms& target) {
  bool found = false;
  Search(pattern, target).run([&](const Binding&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<Matcher::Binding> Matcher::first(const CompiledPattern& pattern,
                                               const IndexedAtoms& target) {
  std::optional<Binding> out;
  Search(pattern, target).run([&](const Binding& b) {
    out = b;
    return false;
  });
  return out;
}

std::size_t Matcher::count(const CompiledPattern& pattern, const IndexedAtoms& target,
                           std::size_t limit) {
  std::size_t n = 0;
  if (limit == 0) return 0;
  Search(pattern, target).run([&](const Binding&) { return ++n < limit; });
  return n;
}

void Matcher::for_each(const CompiledPattern& pattern, const IndexedAtoms& target,
                       const Visitor& visit) {
  Search(pattern, target).run([&](const Binding& b) { return visit(b); });
}

std::optional<Substitution> theta_subsumes(std::span<const Atom> general,
                                           std::span<const Atom> specific) {
  SymbolTable symbols;
  const IndexedAtoms target(specific, symbols);
  const CompiledPattern pattern(general, symbols);
  auto binding = Matcher::first(pattern, target);
  if (!binding) return std::nullopt;
  Substitution theta;
  for (std::size_t i = 0; i < pattern.variable_count(); ++i)
    theta.bind(pattern.variables()[i], symbols.term((*binding)[i]));
  return theta;
}

std::size_t count_substitutions(std::span<const Atom> general, std::span<const Atom> specific) {
  SymbolTable symbols;
  const IndexedAtoms target(specific, symbols);
  const CompiledPattern pattern(general, symbols);
  return Matcher::count(pattern, target);
}

}  // namespace teamseq::rel
