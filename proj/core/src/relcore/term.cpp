#include "teamseq/relcore/term.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace teamseq::rel {

bool Atom::is_ground() const noexcept {
  return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable(); });
}

Atom ground(std::string predicate, std::initializer_list<std::string_view> constants) {
  std::vector<Term> args;
  args.reserve(constants.size());
  for (auto c : constants) args.push_back(Term::constant(std::string(c)));
  return Atom(std::move(predicate), std::move(args));
}

bool Substitution::bind(const std::string& var, Term value) {
  auto [it, inserted] = bindings_.try_emplace(var, value);
  return inserted || it->second == value;
}

const Term* Substitution::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& term) const {
  if (!term.is_variable()) return term;
  if (const Term* bound = lookup(term.name)) return *bound;
  return term;
}

Atom Substitution::apply(const Atom& atom) const {
  Atom out;
  out.predicate = atom.predicate;
  out.args.reserve(atom.args.size());
  for (const auto& t : atom.args) out.args.push_back(apply(t));
  return out;
}

std::vector<Atom> apply_substitution(std::span<const Atom> atoms, const Substitution& theta) {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const auto& a : atoms) out.push_back(theta.apply(a));
  return out;
}

std::string_view to_string(ClassLabel label) noexcept {
  return label == ClassLabel::cbr ? "cbr" : "rea";
}

std::optional<ClassLabel> parse_class_label(std::string_view text) noexcept {
  if (text == "cbr") return ClassLabel::cbr;
  if (text == "rea") return ClassLabel::rea;
  return std::nullopt;
}

std::string to_string(const Term& term) { return term.name; }

std::string to_string(const Atom& atom) {
  std::string out = atom.predicate;
  out += '(';
  for (std::size_t i = 0; i < atom.args.size(); ++i) {
    if (i) out += ',';
    out += atom.args[i].name;
  }
  out += ')';
  return out;
}

std::string to_string(const Pattern& pattern) {
  std::string out;
  for (std::size_t i = 0; i < pattern.atoms.size(); ++i) {
    if (i) out += ',';
    out += to_string(pattern.atoms[i]);
  }
  return out;
}

std::vector<std::string> variables_of(std::span<const Atom> atoms) {
  std::vector<std::string> vars;
  for (const auto& a : atoms)
    for (const auto& t : a.args)
      if (t.is_variable() && std::find(vars.begin(), vars.end(), t.name) == vars.end())
        vars.push_back(t.name);
  return vars;
}

bool is_connected(std::span<const Atom> atoms) {
  if (atoms.size() <= 1) return true;
  // Union-find over atom indices, joined through shared variables.
  std::vector<std::size_t> parent(atoms.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::unordered_map<std::string, std::size_t> first_seen;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (const auto& t : atoms[i].args) {
      if (!t.is_variable()) continue;
      auto [it, inserted] = first_seen.try_emplace(t.name, i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  }
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < atoms.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

std::string display_variable_name(std::size_t index) {
  std::string name(1, static_cast<char>('A' + index % 26));
  if (index >= 26) name += std::to_string(index / 26);
  return name;
}

Pattern with_display_variables(const Pattern& pattern) {
  const auto vars = variables_of(pattern.atoms);
  Substitution rename;
  for (std::size_t i = 0; i < vars.size(); ++i)
    rename.bind(vars[i], Term::variable(display_variable_name(i)));
  return Pattern{apply_substitution(pattern.atoms, rename)};
}

}  // namespace teamseq::rel
