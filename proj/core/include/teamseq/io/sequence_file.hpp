#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "teamseq/relcore/term.hpp"

namespace teamseq::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Records separated by blank lines:
///
///     % seq trial_0001_1 class=cbr scenario=1 config=dg
///     getball(time_1,robot_1).
///     ...
///
/// Other lines starting with '%' are comments.
void write_sequences(std::ostream& out, std::span<const rel::RelationalSequence> corpus);
std::vector<rel::RelationalSequence> read_sequences(std::istream& in);

void save_sequences(const std::filesystem::path& path, std::span<const rel::RelationalSequence> corpus);
std::vector<rel::RelationalSequence> load_sequences(const std::filesystem::path& path);

}  // namespace teamseq::io
