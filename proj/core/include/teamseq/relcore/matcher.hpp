#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "teamseq/relcore/term.hpp"

namespace teamseq::rel {

using SymbolId = std::int32_t;

/// Interns terms and predicate names to dense integer ids. Variables of a
/// *specific* conjunction are interned like constants (they behave as
/// skolem constants during matching), so the kind is part of the key.
class SymbolTable {
 public:
  SymbolId intern_term(const Term& term);
  SymbolId intern_predicate(const std::string& name);
  std::optional<SymbolId> find_predicate(const std::string& name) const;
  const Term& term(SymbolId id) const { return terms_.at(static_cast<std::size_t>(id)); }

 private:
  std::unordered_map<std::string, SymbolId> term_ids_;
  std::vector<Term> terms_;
  std::unordered_map<std::string, SymbolId> predicate_ids_;
};

/// A set of atoms prepared as the target of matching: duplicates removed,
/// indexed by predicate and by (predicate, first argument).
class IndexedAtoms {
 public:
  struct Entry {
    SymbolId predicate;
    std::vector<SymbolId> args;
  };

  IndexedAtoms() = default;
  IndexedAtoms(std::span<const Atom> atoms, SymbolTable& symbols);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::span<const std::uint32_t> by_predicate(SymbolId predicate) const;
  std::span<const std::uint32_t> by_predicate_first(SymbolId predicate, SymbolId first) const;

 private:
  static std::uint64_t key(SymbolId a, SymbolId b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  std::vector<Entry> entries_;
  std::unordered_map<SymbolId, std::vector<std::uint32_t>> by_pred_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_pred_first_;
};

/// The general side of a matching problem. Argument slots hold either a
/// symbol id (>= 0) or an encoded variable slot (< 0).
class CompiledPattern {
 public:
  struct Entry {
    SymbolId predicate;
    std::vector<std::int32_t> args;
  };

  CompiledPattern() = default;
  CompiledPattern(std::span<const Atom> atoms, SymbolTable& symbols);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t variable_count() const noexcept { return variables_.size(); }

  static bool is_var(std::int32_t slot) noexcept { return slot < 0; }
  static std::size_t var_index(std::int32_t slot) noexcept {
    return static_cast<std::size_t>(-slot - 1);
  }

 private:
  std::vector<Entry> entries_;
  std::vector<std::string> variables_;
};

/// Backtracking θ-subsumption over compiled inputs. Every solution is a
/// complete binding of the pattern's variables such that each pattern atom,
/// instantiated, is an atom of the target.
class Matcher {
 public:
  /// Bindings indexed like CompiledPattern::variables(); values are symbol ids.
  using Binding = std::vector<SymbolId>;
  /// Return false to stop the enumeration.
  using Visitor = std::function<bool(const Binding&)>;

  static bool exists(const CompiledPattern& pattern, const IndexedAtoms& target);
  static std::optional<Binding> first(const CompiledPattern& pattern, const IndexedAtoms& target);
  /// Number of distinct solutions, stopping early at `limit`.
  static std::size_t count(const CompiledPattern& pattern, const IndexedAtoms& target,
                           std::size_t limit = std::numeric_limits<std::size_t>::max());
  static void for_each(const CompiledPattern& pattern, const IndexedAtoms& target,
                       const Visitor& visit);
};

/// Returns a witness θ with general·θ ⊆ specific (set semantics), or nullopt.
/// `specific` may contain variables; they are treated as constants.
std::optional<Substitution> theta_subsumes(std::span<const Atom> general,
                                           std::span<const Atom> specific);

/// Number of distinct substitutions over the variables of `general` that
/// embed it into `specific`.
std::size_t count_substitutions(std::span<const Atom> general, std::span<const Atom> specific);

}  // namespace teamseq::rel
