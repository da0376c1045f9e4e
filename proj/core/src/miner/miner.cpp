#include "teamseq/miner/miner.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "teamseq/miner/canonical.hpp"
#include "teamseq/miner/specialize.hpp"
#include "teamseq/relcore/matcher.hpp"

namespace teamseq::mining {

void MiningConfig::validate() const {
  if (!(min_support_alpha > 0.0 && min_support_alpha <= 1.0))
    throw std::invalid_argument("min_support_alpha must be in (0,1]");
  if (maxsize == 0) throw std::invalid_argument("maxsize must be at least 1");
}

std::size_t support_threshold(double alpha, std::size_t n) {
  const double x = std::ceil(alpha * static_cast<double>(n) - 1e-9);
  return x < 0.0 ? 0 : static_cast<std::size_t>(x);
}

namespace {

struct Node {
  rel::Pattern pattern;
  std::string key;
  std::vector<std::uint32_t> tids;  // sequences containing the pattern
};

}  // namespace

std::vector<FrequentPattern> mine(std::span<const rel::RelationalSequence> corpus, const MiningConfig& config,
                                  MiningStats* stats) {
  config.validate();
  if (corpus.empty()) throw std::invalid_argument("empty corpus");
  const auto& bk = config.constraints;
  bk.check_corpus(corpus);
  const Vocabulary vocab = Vocabulary::from_corpus(corpus, bk);

  rel::SymbolTable symbols;
  std::vector<rel::IndexedAtoms> targets;
  targets.reserve(corpus.size());
  for (const auto& s : corpus) targets.emplace_back(s.atoms, symbols);

  std::size_t basis = corpus.size();
  if (config.target_class)
    basis = static_cast<std::size_t>(std::count_if(corpus.begin(), corpus.end(), [&](const auto& s) {
      return s.label == *config.target_class;
    }));
  const std::size_t threshold = std::max<std::size_t>(1, support_threshold(config.min_support_alpha, basis));
  auto counted = [&](const std::vector<std::uint32_t>& tids) {
    if (!config.target_class) return tids.size();
    return static_cast<std::size_t>(std::count_if(tids.begin(), tids.end(), [&](std::uint32_t t) {
      return corpus[t].label == *config.target_class;
    }));
  };

  std::vector<std::uint32_t> all(corpus.size());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;

  std::unordered_set<std::string> seen;
  std::vector<Node> level{Node{{}, "", all}};
  std::vector<Node> frequent;

  for (std::size_t size = 1; size <= config.maxsize && !level.empty(); ++size) {
    std::vector<Node> next;
    std::size_t candidates = 0;
    for (const Node& parent : level) {
      for (auto& child : specialize(parent.pattern, bk, vocab)) {
        std::string key = canonical_form(child);
        if (!seen.insert(key).second) continue;
        ++candidates;
        if (!is_reduced(child)) continue;
        const rel::CompiledPattern compiled(child.atoms, symbols);
        std::vector<std::uint32_t> tids;
        for (auto t : parent.tids)
          if (rel::Matcher::exists(compiled, targets[t])) tids.push_back(t);
        if (counted(tids) < threshold) continue;
        next.push_back(Node{std::move(child), std::move(key), std::move(tids)});
      }
    }
    std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.key < b.key; });
    if (stats) {
      stats->candidates_per_level.push_back(candidates);
      stats->frequent_per_level.push_back(next.size());
    }
    frequent.insert(frequent.end(), next.begin(), next.end());
    level = std::move(next);
  }

  std::map<rel::ClassLabel, std::size_t> class_size;
  for (const auto& s : corpus) ++class_size[s.label];
  std::vector<FrequentPattern> out;
  out.reserve(frequent.size());
  for (auto& n : frequent) {
    FrequentPattern fp;
    fp.support_total = n.tids.size();
    for (auto c : rel::kAllClasses) {
      fp.support_per_class[c] = 0;
      fp.mean_embeddings_per_class[c] = 0.0;
    }
    const rel::CompiledPattern compiled(n.pattern.atoms, symbols);
    for (auto t : n.tids) {
      const auto c = corpus[t].label;
      ++fp.support_per_class[c];
      fp.mean_embeddings_per_class[c] += static_cast<double>(rel::Matcher::count(compiled, targets[t]));
    }
    for (auto& [c, sum] : fp.mean_embeddings_per_class)
      sum = class_size[c] ? sum / static_cast<double>(class_size[c]) : 0.0;
    fp.pattern = std::move(n.pattern);
    fp.key = std::move(n.key);
    out.push_back(std::move(fp));
  }
  return out;
}

}  // namespace teamseq::mining
