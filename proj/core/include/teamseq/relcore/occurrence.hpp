#pragma once

#include <cstddef>
#include <span>

#include "teamseq/relcore/term.hpp"

namespace teamseq::rel {

enum class MatchMode {
  /// θ-subsumption of the pattern's atom set into the sequence's atom set.
  /// next_a atoms can only bind to the sequence's own successor facts, so
  /// temporal order is respected while unmatched descriptive atoms may
  /// interleave.
  conjunctive,
  /// One substitution maps the pattern atoms, in order, onto a contiguous
  /// block of sequence atoms.
  contiguous,
};

bool occurs_in(const Pattern& pattern, const RelationalSequence& sequence,
               MatchMode mode = MatchMode::conjunctive);

/// Number of sequences of the corpus in which the pattern occurs
/// (conjunctive mode). Each sequence counts once.
std::size_t support(const Pattern& pattern, std::span<const RelationalSequence> corpus);

/// Number of distinct witness substitutions over the pattern's variables.
std::size_t count_embeddings(const Pattern& pattern, const RelationalSequence& sequence);

}  // namespace teamseq::rel
