#include "teamseq/io/sequence_file.hpp"

#include <fstream>
#include <sstream>

#include "teamseq/relcore/parser.hpp"

namespace teamseq::io {

void write_sequences(std::ostream& out, std::span<const rel::RelationalSequence> corpus) {
  bool first = true;
  for (const auto& seq : corpus) {
    if (!first) out << '\n';
    first = false;
    out << "% seq " << seq.id << " class=" << to_string(seq.label);
    for (const auto& [k, v] : seq.tags)
      if (k != "class") out << ' ' << k << '=' << v;
    out << '\n';
    for (const auto& a : seq.atoms) out << rel::to_string(a) << ".\n";
  }
}

std::vector<rel::RelationalSequence> read_sequences(std::istream& in) {
  std::vector<rel::RelationalSequence> out;
  rel::AtomParser parser;
  std::string line;
  std::size_t lineno = 0;
  bool open = false;
  auto fail = [&](const std::string& what) {
    throw FormatError("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      open = false;
      continue;
    }
    if (line[first] == '%') {
      std::istringstream hs(line.substr(first + 1));
      std::string word;
      hs >> word;
      if (word != "seq") continue;
      rel::RelationalSequence seq;
      if (!(hs >> seq.id)) fail("sequence header without id");
      bool labelled = false;
      while (hs >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) fail("malformed tag '" + word + "'");
        const std::string key = word.substr(0, eq), value = word.substr(eq + 1);
        if (key == "class") {
          auto c = rel::parse_class_label(value);
          if (!c) fail("unknown class '" + value + "'");
          seq.label = *c;
          labelled = true;
        } else {
          seq.tags[key] = value;
        }
      }
      if (!labelled) fail("sequence header without class");
      out.push_back(std::move(seq));
      open = true;
      continue;
    }
    if (!open) fail("atom outside a sequence record");
    std::string text = line.substr(first);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.pop_back();
    if (text.empty() || text.back() != '.') fail("atom must end with '.'");
    text.pop_back();
    try {
      auto atom = parser.parse_atom(text);
      if (!atom.is_ground()) fail("sequence atoms must be ground: " + text);
      out.back().atoms.push_back(std::move(atom));
    } catch (const rel::ParseError& e) {
      fail(e.what());
    }
  }
  return out;
}

void save_sequences(const std::filesystem::path& path, std::span<const rel::RelationalSequence> corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_sequences(out, corpus);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<rel::RelationalSequence> load_sequences(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_sequences(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace teamseq::io
