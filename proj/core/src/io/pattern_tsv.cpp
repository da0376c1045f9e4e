#include "teamseq/io/pattern_tsv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "teamseq/io/sequence_file.hpp"
#include "teamseq/miner/canonical.hpp"
#include "teamseq/relcore/parser.hpp"

namespace teamseq::io {

namespace {

constexpr const char* kPatternHeader = "pattern\tlen\tsupport_total\tsupport_cbr\tsupport_rea";

std::size_t support_of(const std::map<rel::ClassLabel, std::size_t>& m, rel::ClassLabel c) {
  auto it = m.find(c);
  return it == m.end() ? 0 : it->second;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cols;
}

std::size_t to_count(const std::string& s, std::size_t lineno) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError("line " + std::to_string(lineno) + ": not a count: '" + s + "'");
  }
}

// Iterates data rows after checking the header prefix.
template <class F>
void for_rows(std::istream& in, std::size_t columns, F&& row) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line.rfind(kPatternHeader, 0) != 0) throw FormatError("line 1: unexpected header");
      header = true;
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() != columns)
      throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(columns) + " columns");
    row(cols, lineno);
  }
}

}  // namespace

std::string format_fisher(double value) {
  if (std::isinf(value)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8f", value);
  return buf;
}

void write_patterns(std::ostream& out, std::span<const mining::FrequentPattern> patterns) {
  out << kPatternHeader << '\n';
  for (const auto& p : patterns)
    out << rel::to_string(p.pattern) << '\t' << p.pattern.length() << '\t' << p.support_total << '\t'
        << support_of(p.support_per_class, rel::ClassLabel::cbr) << '\t'
        << support_of(p.support_per_class, rel::ClassLabel::rea) << '\n';
}

std::vector<mining::FrequentPattern> read_patterns(std::istream& in) {
  std::vector<mining::FrequentPattern> out;
  for_rows(in, 5, [&](const std::vector<std::string>& cols, std::size_t lineno) {
    mining::FrequentPattern fp;
    try {
      fp.pattern = rel::parse_pattern(cols[0]);
    } catch (const rel::ParseError& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (to_count(cols[1], lineno) != fp.pattern.length())
      throw FormatError("line " + std::to_string(lineno) + ": len does not match the pattern");
    fp.key = mining::canonical_form(fp.pattern);
    fp.support_total = to_count(cols[2], lineno);
    fp.support_per_class[rel::ClassLabel::cbr] = to_count(cols[3], lineno);
    fp.support_per_class[rel::ClassLabel::rea] = to_count(cols[4], lineno);
    for (auto c : rel::kAllClasses) fp.mean_embeddings_per_class[c] = 0.0;
    out.push_back(std::move(fp));
  });
  return out;
}

void write_ranked(std::ostream& out, std::span<const scoring::RankedPattern> ranked) {
  out << kPatternHeader << "\tfisher\tclass\n";
  for (const auto& r : ranked)
    out << rel::to_string(r.pattern) << '\t' << r.pattern.length() << '\t' << r.support_total << '\t'
        << support_of(r.support_per_class, rel::ClassLabel::cbr) << '\t'
        << support_of(r.support_per_class, rel::ClassLabel::rea) << '\t' << format_fisher(r.fisher) << '\t'
        << to_string(r.attributed_class) << '\n';
}

std::vector<RankedRow> read_ranked(std::istream& in) {
  std::vector<RankedRow> out;
  for_rows(in, 7, [&](const std::vector<std::string>& cols, std::size_t lineno) {
    RankedRow r;
    r.pattern = cols[0];
    r.length = to_count(cols[1], lineno);
    r.support_total = to_count(cols[2], lineno);
    r.support_cbr = to_count(cols[3], lineno);
    r.support_rea = to_count(cols[4], lineno);
    if (cols[5] == "inf") {
      r.fisher = scoring::kFisherInfinity;
    } else {
      try {
        r.fisher = std::stod(cols[5]);
      } catch (const std::exception&) {
        throw FormatError("line " + std::to_string(lineno) + ": bad fisher value");
      }
    }
    auto c = rel::parse_class_label(cols[6]);
    if (!c) throw FormatError("line " + std::to_string(lineno) + ": unknown class");
    r.attributed_class = *c;
    out.push_back(std::move(r));
  });
  return out;
}

}  // namespace teamseq::io
