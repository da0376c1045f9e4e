#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "oracles.hpp"
#include "teamseq/io/pattern_tsv.hpp"
#include "teamseq/io/sequence_file.hpp"
#include "teamseq/simulator/experiment.hpp"

namespace fs = std::filesystem;
using namespace teamseq;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result teamseq_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string cell; std::getline(in, cell, sep);) out.push_back(cell);
  return out;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("teamseq_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string p(const std::string& name) const { return (dir_ / name).string(); }

  // Four short trials abstracted into a sequence file.
  void make_sequences() {
    ASSERT_EQ(teamseq_cli({"simulate", "--scenario", "1", "--config", "dg", "--approach", "both", "--trials", "2",
                           "--seed", "7", "--timeout", "20", "--out", p("logs")})
                  .code,
              0);
    ASSERT_EQ(teamseq_cli({"abstract", "--logs", p("logs"), "--out", p("seqs.txt")}).code, 0);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SimulateWritesLogsAndManifest) {
  const auto r = teamseq_cli({"simulate", "--scenario", "1", "--config", "dg", "--approach", "both", "--trials", "2",
                              "--seed", "7", "--timeout", "20", "--out", p("a")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = sim::load_manifest(dir_ / "a" / sim::kManifestName);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) EXPECT_TRUE(fs::exists(dir_ / "a" / row.path)) << row.path;
  EXPECT_NE(r.out.find("4 trials"), std::string::npos);

  ASSERT_EQ(teamseq_cli({"simulate", "--scenario", "1", "--config", "dg", "--approach", "both", "--trials", "2",
                         "--seed", "7", "--timeout", "20", "--out", p("b")})
                .code,
            0);
  EXPECT_EQ(slurp(dir_ / "a" / sim::kManifestName), slurp(dir_ / "b" / sim::kManifestName));
  for (const auto& row : rows) EXPECT_EQ(slurp(dir_ / "a" / row.path), slurp(dir_ / "b" / row.path));
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(teamseq_cli({"simulate", "--trials", "0", "--out", p("x")}).code, 2);
  EXPECT_EQ(teamseq_cli({"simulate", "--scenario", "7", "--out", p("x")}).code, 2);
  EXPECT_EQ(teamseq_cli({"simulate", "--config", "3d", "--out", p("x")}).code, 2);
  EXPECT_EQ(teamseq_cli({"mine", "--min-support", "1.5"}).code, 2);
  EXPECT_EQ(teamseq_cli({"mine", "--min-support", "0"}).code, 2);
  EXPECT_EQ(teamseq_cli({"rank", "--feature", "counts"}).code, 2);
  EXPECT_EQ(teamseq_cli({}).code, 2);
  EXPECT_EQ(teamseq_cli({"frobnicate"}).code, 2);
  const auto help = teamseq_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("simulate"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "x"));
}

TEST_F(Cli, RuntimeErrors) {
  fs::create_directories(dir_ / "empty");
  const auto r = teamseq_cli({"abstract", "--logs", p("empty"), "--out", p("s.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("manifest.csv"), std::string::npos);
  EXPECT_EQ(teamseq_cli({"mine", "--seqs", p("missing.txt"), "--out", p("pat.tsv")}).code, 1);
  EXPECT_EQ(teamseq_cli({"rank", "--seqs", p("missing.txt"), "--patterns", p("missing.tsv"), "--out", p("r.tsv")}).code, 1);
  std::ofstream(dir_ / "bad.txt") << "% seq a class=cbr\nnot an atom\n";
  const auto bad = teamseq_cli({"mine", "--seqs", p("bad.txt"), "--out", p("pat.tsv")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
}

TEST_F(Cli, AbstractProducesLosslessSequences) {
  make_sequences();
  std::ifstream in(dir_ / "seqs.txt");
  const auto corpus = io::read_sequences(in);
  ASSERT_GE(corpus.size(), 4u);
  std::set<std::string> trials;
  for (const auto& s : corpus) {
    trials.insert(s.tags.at("config") + s.tags.at("scenario") + std::string(rel::to_string(s.label)) + s.tags.at("trial"));
    for (const auto& a : s.atoms) EXPECT_TRUE(a.is_ground());
  }
  EXPECT_EQ(trials.size(), 4u);
  std::ostringstream again;
  io::write_sequences(again, corpus);
  EXPECT_EQ(again.str(), slurp(dir_ / "seqs.txt"));
}

TEST_F(Cli, MineMatchesOracleSupports) {
  make_sequences();
  ASSERT_EQ(teamseq_cli({"mine", "--seqs", p("seqs.txt"), "--maxsize", "1", "--min-support", "0.2", "--out", p("p1.tsv")}).code, 0);
  std::ifstream in1(dir_ / "p1.tsv");
  const auto singles = io::read_patterns(in1);
  ASSERT_FALSE(singles.empty());
  for (const auto& f : singles) EXPECT_EQ(f.pattern.atoms.size(), 1u);

  ASSERT_EQ(teamseq_cli({"mine", "--seqs", p("seqs.txt"), "--maxsize", "3", "--actions-only", "--out", p("p3.tsv")}).code, 0);
  std::ifstream seqs(dir_ / "seqs.txt");
  const auto corpus = io::read_sequences(seqs);
  std::ifstream in3(dir_ / "p3.tsv");
  const auto patterns = io::read_patterns(in3);
  ASSERT_FALSE(patterns.empty());
  const std::size_t threshold = oracle::threshold_permille(100, corpus.size());
  for (const auto& f : patterns) {
    EXPECT_LE(f.pattern.atoms.size(), 3u);
    const auto s = oracle::support(f.pattern.atoms, corpus);
    EXPECT_EQ(f.support_total, s) << rel::to_string(f.pattern);
    EXPECT_GE(s, threshold);
  }
}

TEST_F(Cli, RankAndReport) {
  make_sequences();
  ASSERT_EQ(teamseq_cli({"mine", "--seqs", p("seqs.txt"), "--actions-only", "--out", p("pat.tsv")}).code, 0);
  const auto r = teamseq_cli({"rank", "--seqs", p("seqs.txt"), "--patterns", p("pat.tsv"), "--top", "5", "--out", p("ranked.tsv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ranked_lines = lines_of(slurp(dir_ / "ranked.tsv"));
  ASSERT_GE(ranked_lines.size(), 2u);
  EXPECT_LE(ranked_lines.size(), 6u);
  EXPECT_EQ(split(ranked_lines[0], '\t').size(), 7u);

  ASSERT_EQ(teamseq_cli({"report", "--seqs", p("seqs.txt"), "--ranked", p("ranked.tsv"), "--out", p("rep")}).code, 0);
  const auto table = lines_of(slurp(dir_ / "rep" / "actions.tsv"));
  ASSERT_GE(table.size(), 3u);
  const auto header = split(table[0], '\t');
  std::vector<std::size_t> sums(header.size(), 0);
  std::vector<std::size_t> totals;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto cells = split(table[i], '\t');
    ASSERT_EQ(cells.size(), header.size());
    if (cells[0] == "total") {
      for (std::size_t k = 1; k < cells.size(); ++k) totals.push_back(std::stoul(cells[k]));
      break;
    }
    for (std::size_t k = 1; k < cells.size(); ++k) sums[k] += std::stoul(cells[k]);
  }
  ASSERT_EQ(totals.size(), header.size() - 1);
  for (std::size_t k = 1; k < header.size(); ++k) EXPECT_EQ(sums[k], totals[k - 1]) << header[k];

  const auto pct = lines_of(slurp(dir_ / "rep" / "actions_percent.csv"));
  EXPECT_EQ(pct[0], "action,cbr,rea");
  const auto top = lines_of(slurp(dir_ / "rep" / "top_patterns.tsv"));
  EXPECT_EQ(top.size(), ranked_lines.size());
}

TEST_F(Cli, OutputRootFromEnvironment) {
  ::setenv(cli::kOutputRootEnv, dir_.c_str(), 1);
  EXPECT_EQ(cli::output_root(), dir_);
  const auto r = teamseq_cli({"simulate", "--scenario", "3", "--approach", "rea", "--trials", "1", "--timeout", "5"});
  ::unsetenv(cli::kOutputRootEnv);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "logs" / sim::kManifestName));
  EXPECT_EQ(cli::output_root(), fs::path("teamseq_out"));
}

TEST_F(Cli, ConfigFile) {
  std::ofstream(dir_ / "run.ini") << "[simulate]\nscenario=4\napproach=rea\ntrials=3\ntimeout=5\nout=" << p("cfg") << "\n";
  const auto r = teamseq_cli({"--config-file", p("run.ini"), "simulate"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = sim::load_manifest(dir_ / "cfg" / sim::kManifestName);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.scenario, 4);
    EXPECT_EQ(row.approach, rel::ClassLabel::rea);
    EXPECT_DOUBLE_EQ(row.timeout, 5.0);
  }
}
