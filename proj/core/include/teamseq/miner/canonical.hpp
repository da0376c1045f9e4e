#pragma once

#include <string>

#include "teamseq/relcore/term.hpp"

namespace teamseq::mining {

/// Key that is equal for two patterns exactly when one is a variable
/// renaming of the other (duplicate atoms ignored). Variables are coloured by
/// iterated neighbourhood refinement; ties are broken by trying each member
/// of the first ambiguous colour class and keeping the smallest key.
std::string canonical_form(const rel::Pattern& pattern);

/// Mutual θ-subsumption.
bool is_equivalent(const rel::Pattern& a, const rel::Pattern& b);

/// True when no atom can be dropped without changing the pattern's meaning,
/// i.e. the pattern does not θ-subsume any of its one-atom-smaller subsets.
bool is_reduced(const rel::Pattern& pattern);

}  // namespace teamseq::mining
