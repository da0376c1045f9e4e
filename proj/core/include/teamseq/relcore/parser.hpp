#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "teamseq/relcore/term.hpp"

namespace teamseq::rel {

/// Syntax error in atom text. `offset()` is the byte offset of the
/// offending character in the parsed input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A predicate used with two different arities within one parser's lifetime.
class ArityError : public ParseError {
 public:
  ArityError(const std::string& predicate, std::size_t expected, std::size_t found,
             std::size_t offset);
  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

struct ParseOptions {
  /// Map the vertical relation values up/down onto left/right in the
  /// fourth argument of rel_with_* atoms.
  bool normalize_vertical_synonyms = true;
};

/// Parses `pred(arg,...,arg)` atoms. Uppercase-initial (or '_') arguments
/// become variables, everything else constants. Arities are remembered per
/// predicate across calls so that a corpus is checked for consistent use.
class AtomParser {
 public:
  explicit AtomParser(ParseOptions options = {}) : options_(options) {}

  Atom parse_atom(std::string_view text);

  /// Comma-separated atoms; empty items (",,") and surrounding whitespace
  /// are skipped.
  std::vector<Atom> parse_conjunction(std::string_view text);

  const std::map<std::string, std::size_t>& arities() const noexcept { return arities_; }

 private:
  Atom parse_one(std::string_view text, std::size_t& pos);
  void check_arity(const Atom& atom, std::size_t offset);

  ParseOptions options_;
  std::map<std::string, std::size_t> arities_;
};

Atom parse_atom(std::string_view text);
Pattern parse_pattern(std::string_view text);

/// up -> left, down -> right in the vertical slot of rel_with_* atoms.
void normalize_vertical_synonyms(Atom& atom);

}  // namespace teamseq::rel
