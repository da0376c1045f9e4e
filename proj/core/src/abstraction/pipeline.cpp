#include "teamseq/abstraction/pipeline.hpp"

#include "teamseq/abstraction/actions.hpp"
#include "teamseq/abstraction/events.hpp"
#include "teamseq/abstraction/outcome.hpp"
#include "teamseq/abstraction/segment.hpp"
#include "teamseq/abstraction/sequence_builder.hpp"

namespace teamseq::abstraction {

std::vector<rel::RelationalSequence> abstract_trial(const TrialLog& log, rel::ClassLabel label,
                                                    const std::string& id_prefix,
                                                    const AbstractionConfig& config,
                                                    std::vector<std::string>* warnings) {
  std::vector<rel::RelationalSequence> out;
  if (log.frames.empty()) return out;
  const Roster roster = roster_of(log.frames.front());
  for (const auto& seg : segment_trial(log, config)) {
    const auto events = detect_events(seg.log, config);
    const auto actions = classify_actions(events, seg.log, config, warnings);
    if (actions.empty()) continue;
    std::optional<TrialOutcome> outcome;
    if (seg.end != SegmentEnd::intercept) outcome = classify_outcome(seg.log, config);
    auto seq = emit_sequence(actions, outcome, label, roster);
    seq.id = id_prefix + "_" + std::to_string(out.size() + 1);
    out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace teamseq::abstraction
