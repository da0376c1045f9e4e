#include <gtest/gtest.h>

#include <sstream>

#include "abstraction_cases.hpp"
#include "teamseq/abstraction/pipeline.hpp"
#include "teamseq/io/pattern_tsv.hpp"
#include "teamseq/io/sequence_file.hpp"
#include "teamseq/miner/canonical.hpp"
#include "teamseq/relcore/parser.hpp"
#include "teamseq/scoring/ranking.hpp"

using namespace teamseq;

namespace {

std::vector<rel::RelationalSequence> corpus() {
  std::vector<rel::RelationalSequence> out;
  auto cases = fixtures::branch_cases();
  for (std::size_t i = 0; i < cases.size(); ++i)
    for (auto s : abstraction::abstract_trial(cases[i].log, i % 2 ? rel::ClassLabel::rea : rel::ClassLabel::cbr,
                                              cases[i].name)) {
      s.tags["scenario"] = std::to_string(1 + i % 4);
      s.tags["config"] = "dg";
      out.push_back(std::move(s));
    }
  return out;
}

}  // namespace

TEST(SequenceFile, RoundTrip) {
  const auto c = corpus();
  std::ostringstream out;
  io::write_sequences(out, c);
  std::istringstream in(out.str());
  const auto back = io::read_sequences(in);
  ASSERT_EQ(back.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(back[i].id, c[i].id);
    EXPECT_EQ(back[i].label, c[i].label);
    EXPECT_EQ(back[i].atoms, c[i].atoms);
    EXPECT_EQ(back[i].tags, c[i].tags);
  }
  std::ostringstream again;
  io::write_sequences(again, back);
  EXPECT_EQ(again.str(), out.str());
}

TEST(SequenceFile, Layout) {
  rel::RelationalSequence s;
  s.id = "trial_0001_1";
  s.label = rel::ClassLabel::cbr;
  s.tags = {{"scenario", "1"}, {"config", "dg"}};
  s.atoms = {rel::ground("getball", {"time_1", "robot_1"}), rel::ground("goal", {"time_1"})};
  std::ostringstream out;
  io::write_sequences(out, std::vector{s, s});
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "% seq trial_0001_1 class=cbr config=dg scenario=1");
  EXPECT_NE(text.find("getball(time_1,robot_1).\ngoal(time_1).\n\n% seq"), std::string::npos);
}

TEST(SequenceFile, CommentsAndErrors) {
  std::istringstream ok("% a comment\n% seq a class=rea\np(x).\n\n% seq b class=cbr\nq(y).\n");
  const auto c = io::read_sequences(ok);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].label, rel::ClassLabel::rea);
  std::istringstream no_header("p(x).\n");
  EXPECT_THROW(io::read_sequences(no_header), io::FormatError);
  std::istringstream bad_class("% seq a class=both\np(x).\n");
  EXPECT_THROW(io::read_sequences(bad_class), io::FormatError);
  std::istringstream variable("% seq a class=cbr\np(X).\n");
  EXPECT_THROW(io::read_sequences(variable), io::FormatError);
  std::istringstream no_dot("% seq a class=cbr\np(x)\n");
  EXPECT_THROW(io::read_sequences(no_dot), io::FormatError);
}

TEST(PatternTsv, RoundTrip) {
  std::vector<mining::FrequentPattern> pats(2);
  pats[0].pattern = rel::parse_pattern("getball(A,B)");
  pats[0].support_total = 5;
  pats[0].support_per_class = {{rel::ClassLabel::cbr, 3}, {rel::ClassLabel::rea, 2}};
  pats[1].pattern = rel::parse_pattern("getball(A,B),next_a(A,C),pass(C,B,D)");
  pats[1].support_total = 3;
  pats[1].support_per_class = {{rel::ClassLabel::cbr, 3}};
  for (auto& p : pats) p.key = mining::canonical_form(p.pattern);
  std::ostringstream out;
  io::write_patterns(out, pats);
  EXPECT_EQ(out.str(),
            "pattern\tlen\tsupport_total\tsupport_cbr\tsupport_rea\n"
            "getball(A,B)\t1\t5\t3\t2\n"
            "getball(A,B),next_a(A,C),pass(C,B,D)\t3\t3\t3\t0\n");
  std::istringstream in(out.str());
  const auto back = io::read_patterns(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(rel::to_string(back[1].pattern), "getball(A,B),next_a(A,C),pass(C,B,D)");
  EXPECT_EQ(back[1].key, pats[1].key);
  EXPECT_EQ(back[0].support_per_class.at(rel::ClassLabel::rea), 2u);
}

TEST(RankedTsv, RecordShape) {
  scoring::RankedPattern r;
  r.pattern = rel::parse_pattern("getball(A,B),next_a(A,C),pass(C,B,D)");
  r.fisher = 0.23494427;
  r.attributed_class = rel::ClassLabel::cbr;
  r.support_total = 7;
  r.support_per_class = {{rel::ClassLabel::cbr, 7}};
  scoring::RankedPattern inf = r;
  inf.fisher = scoring::kFisherInfinity;
  inf.attributed_class = rel::ClassLabel::rea;
  std::ostringstream out;
  io::write_ranked(out, std::vector{r, inf});
  EXPECT_EQ(out.str(),
            "pattern\tlen\tsupport_total\tsupport_cbr\tsupport_rea\tfisher\tclass\n"
            "getball(A,B),next_a(A,C),pass(C,B,D)\t3\t7\t7\t0\t0.23494427\tcbr\n"
            "getball(A,B),next_a(A,C),pass(C,B,D)\t3\t7\t7\t0\tinf\trea\n");
  std::istringstream in(out.str());
  const auto rows = io::read_ranked(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_DOUBLE_EQ(rows[0].fisher, 0.23494427);
  EXPECT_EQ(rows[1].fisher, scoring::kFisherInfinity);
  EXPECT_EQ(rows[1].attributed_class, rel::ClassLabel::rea);
  EXPECT_EQ(io::format_fisher(0.5), "0.50000000");
}

TEST(PatternTsv, MalformedRows) {
  std::istringstream bad("pattern\tlen\tsupport_total\tsupport_cbr\tsupport_rea\ngetball(A,B)\tone\t1\t1\t0\n");
  EXPECT_THROW(io::read_patterns(bad), std::runtime_error);
}
