#pragma once

#include <string>
#include <vector>

#include "teamseq/abstraction/config.hpp"
#include "teamseq/abstraction/trial_log.hpp"
#include "teamseq/relcore/term.hpp"

namespace teamseq::abstraction {

/// Segments the trial and turns every episode with at least one action into
/// a sequence with id `<id_prefix>_<k>` (k from 1). Episodes that end in an
/// intercept carry no outcome atom.
std::vector<rel::RelationalSequence> abstract_trial(const TrialLog& log, rel::ClassLabel label,
                                                    const std::string& id_prefix,
                                                    const AbstractionConfig& config = {},
                                                    std::vector<std::string>* warnings = nullptr);

}  // namespace teamseq::abstraction
