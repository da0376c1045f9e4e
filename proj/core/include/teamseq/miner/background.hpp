#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "teamseq/relcore/term.hpp"

namespace teamseq::mining {

enum class PredicateRole : unsigned char {
  action,       ///< seeds patterns; one per time variable
  dimensional,  ///< the successor relation between two action times
  descriptive,  ///< facts about an action time and its entities
  role_fact,    ///< facts about entities only
  ignore,       ///< present in the corpus but never used in patterns
};

enum class ArgMode : unsigned char {
  time,    ///< always a variable, shared through next_a
  entity,  ///< always a variable (players)
  value,   ///< an observed constant or a private variable
};

std::string_view to_string(PredicateRole role) noexcept;
std::string_view to_string(ArgMode mode) noexcept;

struct PredicateDecl {
  std::string name;
  PredicateRole role = PredicateRole::ignore;
  std::vector<ArgMode> modes;

  std::size_t arity() const noexcept { return modes.size(); }
  /// Index of the time argument for action/descriptive predicates.
  std::optional<std::size_t> time_position() const;
};

class BackgroundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UndeclaredPredicate : public BackgroundError {
 public:
  explicit UndeclaredPredicate(const std::string& predicate)
      : BackgroundError("undeclared predicate '" + predicate + "'"), predicate_(predicate) {}
  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

/// Predicate declarations that shape the pattern language.
///
/// Text format, one declaration per line, '#' comments:
///
///     action      getball time entity
///     dimensional next_a  time time
///     descriptive rel_with_ball time entity value value
///     role_fact   agent entity
///     ignore      opponent entity
class BackgroundKnowledge {
 public:
  /// Throws BackgroundError on a redeclaration or an ill-formed mode list.
  void declare(PredicateDecl decl);

  const PredicateDecl* find(std::string_view predicate) const;
  const std::map<std::string, PredicateDecl, std::less<>>& declarations() const noexcept { return decls_; }
  /// The dimensional predicate, if one is declared.
  const PredicateDecl* successor() const;

  /// Throws UndeclaredPredicate for the first corpus predicate without a
  /// declaration, BackgroundError on an arity mismatch.
  void check_corpus(std::span<const rel::RelationalSequence> corpus) const;

  static BackgroundKnowledge parse(std::istream& in);
  static BackgroundKnowledge parse(std::string_view text);
  static BackgroundKnowledge load(const std::filesystem::path& path);

  /// Declarations for the soccer sequences, with every relation usable.
  static BackgroundKnowledge soccer();
  /// Soccer declarations where only actions and next_a grow patterns.
  static BackgroundKnowledge soccer_actions_only();

 private:
  std::map<std::string, PredicateDecl, std::less<>> decls_;
};

}  // namespace teamseq::mining
