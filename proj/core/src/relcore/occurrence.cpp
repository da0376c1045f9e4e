#include "teamseq/relcore/occurrence.hpp"

#include "teamseq/relcore/matcher.hpp"

namespace teamseq::rel {

namespace {

bool match_term(const Term& general, const Term& specific, Substitution& theta) {
  if (general.is_variable()) return theta.bind(general.name, specific);
  return general == specific;
}

bool occurs_contiguous(const Pattern& pattern, const RelationalSequence& sequence) {
  const auto& pat = pattern.atoms;
  const auto& seq = sequence.atoms;
  if (pat.empty() || pat.size() > seq.size()) return false;
  for (std::size_t j = 0; j + pat.size() <= seq.size(); ++j) {
    Substitution theta;
    bool ok = true;
    for (std::size_t i = 0; i < pat.size() && ok; ++i) {
      const Atom& g = pat[i];
      const Atom& s = seq[j + i];
      if (g.predicate != s.predicate || g.arity() != s.arity()) {
        ok = false;
        break;
      }
      for (std::size_t k = 0; k < g.arity() && ok; ++k) ok = match_term(g.args[k], s.args[k], theta);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool occurs_in(const Pattern& pattern, const RelationalSequence& sequence, MatchMode mode) {
  if (mode == MatchMode::contiguous) return occurs_contiguous(pattern, sequence);
  return theta_subsumes(pattern.atoms, sequence.atoms).has_value();
}

std::size_t support(const Pattern& pattern, std::span<const RelationalSequence> corpus) {
  SymbolTable symbols;
  const CompiledPattern compiled(pattern.atoms, symbols);
  std::size_t n = 0;
  for (const auto& seq : corpus) {
    const IndexedAtoms target(seq.atoms, symbols);
    if (Matcher::exists(compiled, target)) ++n;
  }
  return n;
}

std::size_t count_embeddings(const Pattern& pattern, const RelationalSequence& sequence) {
  return count_substitutions(pattern.atoms, sequence.atoms);
}

}  // namespace teamseq::rel
