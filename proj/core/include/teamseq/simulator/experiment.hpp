#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "teamseq/simulator/casebase.hpp"
#include "teamseq/simulator/config.hpp"

namespace teamseq::sim {

struct ExperimentMatrix {
  std::vector<OpponentConfig> configs{OpponentConfig::dg};
  std::vector<int> scenarios{1, 2, 3, 4};
  std::vector<Approach> approaches{Approach::cbr, Approach::rea};
  std::size_t trials_per_cell = 50;
  std::uint64_t seed = 1;
  double timeout = 60.0;
  Kinematics kinematics;

  /// Throws std::invalid_argument for an empty axis or zero trials.
  void validate() const;
};

/// One cell of the matrix: cells are numbered config-major, then scenario,
/// then approach.
struct Cell {
  std::size_t index = 0;
  OpponentConfig config = OpponentConfig::dg;
  int scenario = 1;
  Approach approach = Approach::cbr;
};

std::vector<Cell> cells_of(const ExperimentMatrix& m);

struct ManifestRow {
  std::size_t cell = 0;
  int scenario = 1;
  OpponentConfig config = OpponentConfig::dg;
  Approach approach = Approach::cbr;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string path;  ///< relative to the experiment directory
  std::string outcome;
  double timeout = 60.0;
  bool operator==(const ManifestRow&) const = default;
};

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kManifestName = "manifest.csv";

/// Relative log path of a trial: <config>/s<scenario>_<approach>/trial_NNNN.jsonl
std::string trial_path(const Cell& cell, std::size_t trial);

/// Runs every trial of the matrix and writes one JSONL log per trial plus
/// manifest.csv under `out`. Trial seeds are derived from the master seed,
/// the cell index and the trial number. `progress` is called after each
/// trial. File errors throw std::runtime_error naming the path.
std::vector<ManifestRow> run_experiment(const ExperimentMatrix& matrix, const std::filesystem::path& out,
                                        const CaseBase& casebase,
                                        const std::function<void(const ManifestRow&)>& progress = {});

void write_manifest(std::ostream& out, const std::vector<ManifestRow>& rows);
std::vector<ManifestRow> read_manifest(std::istream& in);
std::vector<ManifestRow> load_manifest(const std::filesystem::path& path);

}  // namespace teamseq::sim
