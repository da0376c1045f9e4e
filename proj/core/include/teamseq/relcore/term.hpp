#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace teamseq::rel {

enum class TermKind : unsigned char { constant, variable };

/// A Datalog term: a constant or a variable. There are no compound terms.
///
/// Lexical convention: variables begin with an uppercase letter or '_',
/// constants with a lowercase letter or a digit.
struct Term {
  TermKind kind = TermKind::constant;
  std::string name;

  static Term constant(std::string name) { return {TermKind::constant, std::move(name)}; }
  static Term variable(std::string name) { return {TermKind::variable, std::move(name)}; }

  bool is_variable() const noexcept { return kind == TermKind::variable; }
  bool is_constant() const noexcept { return kind == TermKind::constant; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  Atom() = default;
  Atom(std::string pred, std::vector<Term> arguments)
      : predicate(std::move(pred)), args(std::move(arguments)) {}

  std::size_t arity() const noexcept { return args.size(); }
  bool is_ground() const noexcept;

  auto operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;
};

/// Builds a ground atom from constant names, e.g. ground("pass", {"time_2", "robot_1", "robot_2"}).
Atom ground(std::string predicate, std::initializer_list<std::string_view> constants);

/// A set of variable bindings. A variable is bound at most once.
class Substitution {
 public:
  /// Binds `var` to `value`. Returns false (and leaves the substitution
  /// unchanged) when `var` is already bound to a different term.
  bool bind(const std::string& var, Term value);

  const Term* lookup(const std::string& var) const;
  Term apply(const Term& term) const;
  Atom apply(const Atom& atom) const;

  std::size_t size() const noexcept { return bindings_.size(); }
  bool empty() const noexcept { return bindings_.empty(); }
  const std::map<std::string, Term>& bindings() const noexcept { return bindings_; }

  bool operator==(const Substitution&) const = default;

 private:
  std::map<std::string, Term> bindings_;
};

std::vector<Atom> apply_substitution(std::span<const Atom> atoms, const Substitution& theta);

enum class ClassLabel : unsigned char { cbr, rea };

std::string_view to_string(ClassLabel label) noexcept;
std::optional<ClassLabel> parse_class_label(std::string_view text) noexcept;
inline constexpr ClassLabel kAllClasses[] = {ClassLabel::cbr, ClassLabel::rea};

/// An ordered list of ground atoms describing one trial episode.
struct RelationalSequence {
  std::string id;
  ClassLabel label = ClassLabel::cbr;
  std::vector<Atom> atoms;
  /// Extra `key=value` annotations carried in the sequence file header
  /// (scenario, opponent configuration).
  std::map<std::string, std::string> tags;
};

/// A conjunction of (possibly non-ground) atoms. Atom order is the order in
/// which the pattern was grown and is kept for display only; matching uses
/// set semantics.
struct Pattern {
  std::vector<Atom> atoms;

  std::size_t length() const noexcept { return atoms.size(); }
  bool empty() const noexcept { return atoms.empty(); }
};

std::string to_string(const Term& term);
std::string to_string(const Atom& atom);
/// Comma-joined atoms, e.g. "getball(A,B),next_a(A,C),pass(C,B,D)".
std::string to_string(const Pattern& pattern);

/// Variables of `atoms` in order of first occurrence.
std::vector<std::string> variables_of(std::span<const Atom> atoms);

/// True when the variable-sharing graph over the atoms has one component.
/// Ground atoms are isolated vertices; a single atom is connected.
bool is_connected(std::span<const Atom> atoms);

/// Renames the pattern's variables to A, B, ..., Z, A1, ... by first occurrence.
Pattern with_display_variables(const Pattern& pattern);
std::string display_variable_name(std::size_t index);

}  // namespace teamseq::rel
