#include "teamseq/simulator/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "teamseq/abstraction/trial_log.hpp"
#include "teamseq/simulator/rng.hpp"
#include "teamseq/simulator/trial.hpp"

namespace teamseq::sim {

namespace {

constexpr const char* kHeader = "cell,scenario,config,approach,trial,seed,path,outcome,timeout";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string format_timeout(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

}  // namespace

void ExperimentMatrix::validate() const {
  if (configs.empty() || scenarios.empty() || approaches.empty())
    throw std::invalid_argument("experiment matrix has an empty axis");
  if (trials_per_cell == 0) throw std::invalid_argument("trials per cell must be at least 1");
  for (int s : scenarios) scenario_ball(s);
  if (!(timeout > 0.0)) throw std::invalid_argument("timeout must be positive");
}

std::vector<Cell> cells_of(const ExperimentMatrix& m) {
  std::vector<Cell> out;
  for (auto c : m.configs)
    for (int s : m.scenarios)
      for (auto a : m.approaches) out.push_back({out.size(), c, s, a});
  return out;
}

std::string trial_path(const Cell& cell, std::size_t trial) {
  char name[32];
  std::snprintf(name, sizeof name, "trial_%04zu.jsonl", trial);
  return std::string(to_string(cell.config)) + "/s" + std::to_string(cell.scenario) + "_" +
         std::string(rel::to_string(cell.approach)) + "/" + name;
}

std::vector<ManifestRow> run_experiment(const ExperimentMatrix& matrix, const std::filesystem::path& out,
                                        const CaseBase& casebase,
                                        const std::function<void(const ManifestRow&)>& progress) {
  matrix.validate();
  std::vector<ManifestRow> rows;
  for (const Cell& cell : cells_of(matrix)) {
    for (std::size_t trial = 0; trial < matrix.trials_per_cell; ++trial) {
      SimConfig config;
      config.scenario = cell.scenario;
      config.opponents = cell.config;
      config.approach = cell.approach;
      config.seed = derive_seed(matrix.seed, cell.index, trial);
      config.timeout = matrix.timeout;
      config.kinematics = matrix.kinematics;
      const auto log = run_trial(config, &casebase);

      ManifestRow row{cell.index, cell.scenario, cell.config, cell.approach, trial, config.seed,
                      trial_path(cell, trial), log.trailer ? log.trailer->outcome : "", matrix.timeout};
      const auto file = out / row.path;
      std::error_code ec;
      std::filesystem::create_directories(file.parent_path(), ec);
      if (ec) throw std::runtime_error("cannot create " + file.parent_path().string() + ": " + ec.message());
      std::ofstream os(file, std::ios::binary);
      if (!os) throw std::runtime_error("cannot write " + file.string());
      abstraction::write_jsonl(os, log);
      if (!os) throw std::runtime_error("cannot write " + file.string());
      rows.push_back(row);
      if (progress) progress(row);
    }
  }
  const auto manifest = out / kManifestName;
  std::ofstream os(manifest, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + manifest.string());
  write_manifest(os, rows);
  if (!os) throw std::runtime_error("cannot write " + manifest.string());
  return rows;
}

void write_manifest(std::ostream& out, const std::vector<ManifestRow>& rows) {
  out << kHeader << '\n';
  for (const auto& r : rows)
    out << r.cell << ',' << r.scenario << ',' << to_string(r.config) << ',' << rel::to_string(r.approach) << ','
        << r.trial << ',' << r.seed << ',' << r.path << ',' << r.outcome << ',' << format_timeout(r.timeout) << '\n';
}

std::vector<ManifestRow> read_manifest(std::istream& in) {
  std::vector<ManifestRow> rows;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw ManifestError("manifest line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) {
      if (line != kHeader) fail("unexpected header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 9) fail("expected 9 columns");
    ManifestRow r;
    try {
      r.cell = std::stoull(f[0]);
      r.scenario = std::stoi(f[1]);
      r.trial = std::stoull(f[4]);
      r.seed = std::stoull(f[5]);
      r.timeout = std::stod(f[8]);
    } catch (const std::exception&) {
      fail("bad number");
    }
    const auto config = parse_opponent_config(f[2]);
    const auto approach = rel::parse_class_label(f[3]);
    if (!config) fail("unknown config '" + f[2] + "'");
    if (!approach) fail("unknown approach '" + f[3] + "'");
    r.config = *config;
    r.approach = *approach;
    r.path = f[6];
    r.outcome = f[7];
    rows.push_back(std::move(r));
  }
  if (lineno == 0) throw ManifestError("empty manifest");
  return rows;
}

std::vector<ManifestRow> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open " + path.string());
  try {
    return read_manifest(in);
  } catch (const ManifestError& e) {
    throw ManifestError(path.string() + ": " + e.what());
  }
}

}  // namespace teamseq::sim
