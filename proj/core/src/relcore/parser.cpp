#include "teamseq/relcore/parser.hpp"

#include <cctype>

namespace teamseq::rel {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

ArityError::ArityError(const std::string& predicate, std::size_t expected, std::size_t found,
                       std::size_t offset)
    : ParseError("predicate '" + predicate + "' used with arity " + std::to_string(found) +
                     " but previously with arity " + std::to_string(expected),
                 offset),
      predicate_(predicate) {}

namespace {

bool is_ident_start(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c); }

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

std::string_view read_ident(std::string_view text, std::size_t& pos, const char* what) {
  skip_space(text, pos);
  const std::size_t start = pos;
  if (pos >= text.size() || !is_ident_start(text[pos]))
    throw ParseError(std::string("expected ") + what, pos);
  while (pos < text.size() && is_ident_char(text[pos])) ++pos;
  return text.substr(start, pos - start);
}

void expect(std::string_view text, std::size_t& pos, char c) {
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != c)
    throw ParseError(std::string("expected '") + c + "'", pos);
  ++pos;
}

Term make_term(std::string_view name) {
  const char first = name.front();
  if (std::isupper(static_cast<unsigned char>(first)) || first == '_')
    return Term::variable(std::string(name));
  return Term::constant(std::string(name));
}

}  // namespace

void normalize_vertical_synonyms(Atom& atom) {
  if (atom.predicate.rfind("rel_with_", 0) != 0 || atom.args.size() != 4) return;
  Term& vertical = atom.args[3];
  if (!vertical.is_constant()) return;
  if (vertical.name == "up") vertical.name = "left";
  else if (vertical.name == "down") vertical.name = "right";
}

Atom AtomParser::parse_one(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  const std::size_t atom_start = pos;
  const auto pred = read_ident(text, pos, "predicate symbol");
  if (!std::islower(static_cast<unsigned char>(pred.front())))
    throw ParseError("predicate symbol must start with a lowercase letter", atom_start);
  expect(text, pos, '(');
  Atom atom;
  atom.predicate = std::string(pred);
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == ')') throw ParseError("empty argument list", pos);
  for (;;) {
    const auto arg = read_ident(text, pos, "argument");
    atom.args.push_back(make_term(arg));
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == '(')
      throw ParseError("compound terms are not allowed", pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    expect(text, pos, ')');
    break;
  }
  if (options_.normalize_vertical_synonyms) normalize_vertical_synonyms(atom);
  check_arity(atom, atom_start);
  return atom;
}

void AtomParser::check_arity(const Atom& atom, std::size_t offset) {
  auto [it, inserted] = arities_.try_emplace(atom.predicate, atom.arity());
  if (!inserted && it->second != atom.arity())
    throw ArityError(atom.predicate, it->second, atom.arity(), offset);
}

Atom AtomParser::parse_atom(std::string_view text) {
  std::size_t pos = 0;
  Atom atom = parse_one(text, pos);
  skip_space(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after atom", pos);
  return atom;
}

std::vector<Atom> AtomParser::parse_conjunction(std::string_view text) {
  std::vector<Atom> atoms;
  std::size_t pos = 0;
  for (;;) {
    skip_space(text, pos);
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_space(text, pos);
    }
    if (pos >= text.size()) break;
    atoms.push_back(parse_one(text, pos));
    skip_space(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' between atoms", pos);
  }
  return atoms;
}

Atom parse_atom(std::string_view text) {
  AtomParser parser;
  return parser.parse_atom(text);
}

Pattern parse_pattern(std::string_view text) {
  AtomParser parser;
  return Pattern{parser.parse_conjunction(text)};
}

}  // namespace teamseq::rel
