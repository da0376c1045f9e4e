#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <set>

#include "teamseq/abstraction/pipeline.hpp"
#include "teamseq/io/pattern_tsv.hpp"
#include "teamseq/io/sequence_file.hpp"
#include "teamseq/miner/miner.hpp"
#include "teamseq/scoring/distribution.hpp"
#include "teamseq/scoring/ranking.hpp"
#include "teamseq/simulator/experiment.hpp"

namespace teamseq::cli {

namespace fs = std::filesystem;

namespace {

/// Failure that maps to exit code 1.
struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimulateArgs {
  std::string scenario = "all";
  std::string config = "dg";
  std::string approach = "both";
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  double timeout = 60.0;
  std::string casebase;
  fs::path out;
};

struct AbstractArgs {
  fs::path logs;
  fs::path out;
};

struct MineArgs {
  fs::path seqs;
  double min_support = 0.10;
  std::size_t maxsize = 3;
  std::string bk;
  bool actions_only = false;
  fs::path out;
};

struct RankArgs {
  fs::path seqs;
  fs::path patterns;
  std::size_t top = 20;
  std::string feature = "embeddings";
  fs::path out;
};

struct ReportArgs {
  fs::path seqs;
  fs::path ranked;
  std::size_t top = 20;
  fs::path out;
};

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw RuntimeFailure("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw RuntimeFailure("cannot write " + path.string());
  return os;
}

void close_out(std::ofstream& os, const fs::path& path) {
  os.close();
  if (!os) throw RuntimeFailure("cannot write " + path.string());
}

std::ifstream open_in(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw RuntimeFailure("cannot open " + path.string());
  return in;
}

std::vector<rel::RelationalSequence> load_corpus(const fs::path& path) {
  if (!fs::exists(path)) throw RuntimeFailure("cannot open " + path.string());
  return io::load_sequences(path);
}

// simulate -----------------------------------------------------------------

sim::ExperimentMatrix matrix_of(const SimulateArgs& a) {
  sim::ExperimentMatrix m;
  m.scenarios = a.scenario == "all" ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{std::stoi(a.scenario)};
  m.configs = {*sim::parse_opponent_config(a.config)};
  if (a.approach == "both") m.approaches = {rel::ClassLabel::cbr, rel::ClassLabel::rea};
  else m.approaches = {*rel::parse_class_label(a.approach)};
  m.trials_per_cell = a.trials;
  m.seed = a.seed;
  m.timeout = a.timeout;
  return m;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const auto cb = a.casebase.empty() ? sim::CaseBase::standard() : sim::CaseBase::load(a.casebase);
  const auto rows = sim::run_experiment(matrix_of(a), a.out, cb);
  std::map<std::string, std::size_t> tally;
  for (const auto& r : rows) ++tally[r.outcome];
  out << rows.size() << " trials written to " << a.out.string() << ":";
  for (const auto& [outcome, n] : tally) out << ' ' << outcome << '=' << n;
  out << '\n';
  return kOk;
}

// abstract -----------------------------------------------------------------

int cmd_abstract(const AbstractArgs& a, std::ostream& out, std::ostream& err) {
  const auto manifest_path = a.logs / sim::kManifestName;
  if (!fs::exists(manifest_path)) throw RuntimeFailure("no " + std::string(sim::kManifestName) + " in " + a.logs.string());
  const auto rows = sim::load_manifest(manifest_path);
  if (rows.empty()) throw RuntimeFailure(manifest_path.string() + " lists no trials");

  std::vector<rel::RelationalSequence> corpus;
  std::size_t warnings = 0;
  for (const auto& row : rows) {
    const auto path = a.logs / row.path;
    abstraction::TrialLog log;
    try {
      auto in = open_in(path);
      log = abstraction::read_jsonl(in);
    } catch (const std::exception& e) {
      throw RuntimeFailure(path.string() + ": " + e.what());
    }
    const std::string prefix = std::string(sim::to_string(row.config)) + "_s" + std::to_string(row.scenario) + "_" +
                               std::string(rel::to_string(row.approach)) + "_" + std::to_string(row.trial);
    std::vector<std::string> w;
    auto seqs = abstraction::abstract_trial(log, row.approach, prefix, {}, &w);
    for (const auto& msg : w) err << "warning: " << path.string() << ": " << msg << '\n';
    warnings += w.size();
    for (auto& s : seqs) {
      s.tags["scenario"] = std::to_string(row.scenario);
      s.tags["config"] = std::string(sim::to_string(row.config));
      s.tags["trial"] = std::to_string(row.trial);
      corpus.push_back(std::move(s));
    }
  }
  auto os = open_out(a.out);
  io::write_sequences(os, corpus);
  close_out(os, a.out);
  out << corpus.size() << " sequences from " << rows.size() << " trials written to " << a.out.string();
  if (warnings) out << " (" << warnings << " warnings)";
  out << '\n';
  return kOk;
}

// mine / rank --------------------------------------------------------------

int cmd_mine(const MineArgs& a, std::ostream& out) {
  const auto corpus = load_corpus(a.seqs);
  mining::MiningConfig config;
  config.min_support_alpha = a.min_support;
  config.maxsize = a.maxsize;
  if (!a.bk.empty()) config.constraints = mining::BackgroundKnowledge::load(a.bk);
  else if (a.actions_only) config.constraints = mining::BackgroundKnowledge::soccer_actions_only();
  mining::MiningStats stats;
  const auto patterns = mining::mine(corpus, config, &stats);
  auto os = open_out(a.out);
  io::write_patterns(os, patterns);
  close_out(os, a.out);
  out << patterns.size() << " frequent patterns (threshold " << mining::support_threshold(a.min_support, corpus.size())
      << " of " << corpus.size() << " sequences) written to " << a.out.string() << '\n';
  return kOk;
}

int cmd_rank(const RankArgs& a, std::ostream& out) {
  const auto corpus = load_corpus(a.seqs);
  auto in = open_in(a.patterns);
  const auto patterns = io::read_patterns(in);
  const auto mode = a.feature == "binary" ? scoring::FeatureMode::binary : scoring::FeatureMode::embeddings;
  const auto ranked = scoring::rank(patterns, corpus, a.top, mode);
  auto os = open_out(a.out);
  io::write_ranked(os, ranked);
  close_out(os, a.out);
  out << ranked.size() << " ranked patterns written to " << a.out.string() << '\n';
  return kOk;
}

// report -------------------------------------------------------------------

void write_action_table(std::ostream& os, const std::vector<rel::RelationalSequence>& corpus) {
  std::map<std::string, std::vector<rel::RelationalSequence>> by_scenario;
  for (const auto& s : corpus) {
    const auto it = s.tags.find("scenario");
    by_scenario[it == s.tags.end() ? "all" : it->second].push_back(s);
  }
  std::vector<std::pair<std::string, scoring::ActionTable>> tables;
  for (const auto& [scenario, seqs] : by_scenario) tables.emplace_back(scenario, scoring::action_distribution(seqs));

  os << "action";
  for (const auto& [scenario, t] : tables)
    for (auto c : rel::kAllClasses) os << "\ts" << scenario << "_" << rel::to_string(c);
  os << '\n';
  const auto& actions = scoring::action_distribution({}).actions;
  for (const auto& act : actions) {
    os << act;
    for (const auto& [scenario, t] : tables)
      for (auto c : rel::kAllClasses) os << '\t' << t.count(c, act);
    os << '\n';
  }
  os << "total";
  for (const auto& [scenario, t] : tables)
    for (auto c : rel::kAllClasses) os << '\t' << t.total(c);
  os << "\nsequences";
  for (const auto& [scenario, t] : tables)
    for (auto c : rel::kAllClasses) {
      const auto it = t.sequences.find(c);
      os << '\t' << (it == t.sequences.end() ? 0 : it->second);
    }
  os << '\n';
}

void write_percentages(std::ostream& os, const std::vector<rel::RelationalSequence>& corpus) {
  const auto t = scoring::action_distribution(corpus);
  os << "action";
  for (auto c : rel::kAllClasses) os << ',' << rel::to_string(c);
  os << '\n';
  char buf[32];
  for (const auto& act : t.actions) {
    os << act;
    for (auto c : rel::kAllClasses) {
      std::snprintf(buf, sizeof buf, "%.4f", t.percentage(c, act));
      os << ',' << buf;
    }
    os << '\n';
  }
}

int cmd_report(const ReportArgs& a, std::ostream& out) {
  const auto corpus = load_corpus(a.seqs);
  auto in = open_in(a.ranked);
  auto ranked = io::read_ranked(in);
  if (ranked.size() > a.top) ranked.resize(a.top);

  const auto table_path = a.out / "actions.tsv";
  auto table = open_out(table_path);
  write_action_table(table, corpus);
  close_out(table, table_path);

  const auto pct_path = a.out / "actions_percent.csv";
  auto pct = open_out(pct_path);
  write_percentages(pct, corpus);
  close_out(pct, pct_path);

  const auto top_path = a.out / "top_patterns.tsv";
  auto top = open_out(top_path);
  top << "pattern\tfisher\tteam\n";
  for (const auto& r : ranked)
    top << r.pattern << '\t' << io::format_fisher(r.fisher) << '\t' << rel::to_string(r.attributed_class) << '\n';
  close_out(top, top_path);

  out << "report written to " << a.out.string() << " (actions.tsv, actions_percent.csv, top_patterns.tsv)\n";
  return kOk;
}

CLI::Validator alpha_validator() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        double v = 0.0;
        try {
          v = std::stod(s);
        } catch (const std::exception&) {
          return "not a number: " + s;
        }
        if (!(v > 0.0 && v <= 1.0)) return "minimum support must be in (0, 1], got " + s;
        return {};
      },
      "(0,1]");
}

}  // namespace

fs::path output_root() {
  const char* env = std::getenv(kOutputRootEnv);
  return env && *env ? fs::path(env) : fs::path("teamseq_out");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const fs::path root = output_root();
  CLI::App app{"Simulate, abstract, mine and rank team-play sequences of robot soccer trials", "teamseq"};
  app.require_subcommand(1);
  app.set_config("--config-file", "", "key=value settings; [simulate] style sections set command options");

  SimulateArgs sim_args;
  sim_args.out = root / "logs";
  auto* simulate = app.add_subcommand("simulate", "Run simulated trials and write logs plus manifest.csv");
  simulate->add_option("--scenario", sim_args.scenario, "1..4 or all")
      ->check(CLI::IsMember({"1", "2", "3", "4", "all"}))->capture_default_str();
  simulate->add_option("--config", sim_args.config, "Opponents: dg or 2d")
      ->check(CLI::IsMember({"dg", "2d"}))->capture_default_str();
  simulate->add_option("--approach", sim_args.approach, "cbr, rea or both")
      ->check(CLI::IsMember({"cbr", "rea", "both"}))->capture_default_str();
  simulate->add_option("--trials", sim_args.trials, "Trials per cell")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--seed", sim_args.seed, "Master seed")->capture_default_str();
  simulate->add_option("--timeout", sim_args.timeout, "Seconds per trial")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--casebase", sim_args.casebase, "Case base file (default: built in)")->check(CLI::ExistingFile);
  simulate->add_option("--out", sim_args.out, "Output directory")->capture_default_str();

  AbstractArgs abs_args{root / "logs", root / "sequences.txt"};
  auto* abstract = app.add_subcommand("abstract", "Turn trial logs into relational sequences");
  abstract->add_option("--logs", abs_args.logs, "Directory with manifest.csv")->capture_default_str();
  abstract->add_option("--out", abs_args.out, "Sequence file")->capture_default_str();

  MineArgs mine_args;
  mine_args.seqs = root / "sequences.txt";
  mine_args.out = root / "patterns.tsv";
  auto* mine = app.add_subcommand("mine", "Mine frequent relational patterns");
  mine->add_option("--seqs", mine_args.seqs, "Sequence file")->capture_default_str();
  mine->add_option("--min-support", mine_args.min_support, "Minimum support as a fraction of sequences")
      ->check(alpha_validator())->capture_default_str();
  mine->add_option("--maxsize", mine_args.maxsize, "Maximum pattern length")->check(CLI::PositiveNumber)->capture_default_str();
  auto* bk = mine->add_option("--bk", mine_args.bk, "Predicate declarations file")->check(CLI::ExistingFile);
  mine->add_flag("--actions-only", mine_args.actions_only, "Use actions and next_a only")->excludes(bk);
  mine->add_option("--out", mine_args.out, "Pattern TSV")->capture_default_str();

  RankArgs rank_args;
  rank_args.seqs = root / "sequences.txt";
  rank_args.patterns = root / "patterns.tsv";
  rank_args.out = root / "ranked.tsv";
  auto* rank = app.add_subcommand("rank", "Rank mined patterns by Fisher score");
  rank->add_option("--seqs", rank_args.seqs, "Sequence file")->capture_default_str();
  rank->add_option("--patterns", rank_args.patterns, "Pattern TSV from mine")->capture_default_str();
  rank->add_option("--top", rank_args.top, "Number of patterns kept")->capture_default_str();
  rank->add_option("--feature", rank_args.feature, "embeddings or binary")
      ->check(CLI::IsMember({"embeddings", "binary"}))->capture_default_str();
  rank->add_option("--out", rank_args.out, "Ranked TSV")->capture_default_str();

  ReportArgs report_args{root / "sequences.txt", root / "ranked.tsv", 20, root / "report"};
  auto* report = app.add_subcommand("report", "Write action tables and the top pattern listing");
  report->add_option("--seqs", report_args.seqs, "Sequence file")->capture_default_str();
  report->add_option("--ranked", report_args.ranked, "Ranked TSV from rank")->capture_default_str();
  report->add_option("--top", report_args.top, "Patterns listed")->capture_default_str();
  report->add_option("--out", report_args.out, "Report directory")->capture_default_str();

  std::vector<const char*> argv{"teamseq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "teamseq: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*simulate) return cmd_simulate(sim_args, out);
    if (*abstract) return cmd_abstract(abs_args, out, err);
    if (*mine) return cmd_mine(mine_args, out);
    if (*rank) return cmd_rank(rank_args, out);
    if (*report) return cmd_report(report_args, out);
  } catch (const std::exception& e) {
    err << "teamseq: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace teamseq::cli
