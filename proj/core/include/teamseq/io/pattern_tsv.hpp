#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "teamseq/miner/miner.hpp"
#include "teamseq/scoring/ranking.hpp"

namespace teamseq::io {

/// Columns: pattern, len, support_total, support_cbr, support_rea.
void write_patterns(std::ostream& out, std::span<const mining::FrequentPattern> patterns);
/// Supports are read back; mean embeddings are left at zero.
std::vector<mining::FrequentPattern> read_patterns(std::istream& in);

/// Pattern columns followed by fisher (8 decimals, "inf" for the sentinel)
/// and class.
void write_ranked(std::ostream& out, std::span<const scoring::RankedPattern> ranked);

struct RankedRow {
  std::string pattern;
  std::size_t length = 0;
  std::size_t support_total = 0;
  std::size_t support_cbr = 0;
  std::size_t support_rea = 0;
  double fisher = 0.0;
  rel::ClassLabel attributed_class = rel::ClassLabel::cbr;
};
std::vector<RankedRow> read_ranked(std::istream& in);

std::string format_fisher(double value);

}  // namespace teamseq::io
