#include "teamseq/miner/canonical.hpp"

#include <algorithm>
#include <map>

#include "teamseq/relcore/matcher.hpp"

namespace teamseq::mining {

namespace {

struct Arg {
  bool is_var;
  int var;             // when is_var
  const std::string* name;  // constant name otherwise
};

struct Shape {
  std::vector<std::pair<const std::string*, std::vector<Arg>>> atoms;
  std::size_t n_vars = 0;
  // occurrences[v] = (atom index, position)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occurrences;
};

Shape build(const rel::Pattern& pattern) {
  Shape s;
  std::map<std::string, int> ids;
  for (const auto& a : pattern.atoms) {
    std::vector<Arg> args;
    for (const auto& t : a.args) {
      if (t.is_variable()) {
        auto [it, fresh] = ids.try_emplace(t.name, static_cast<int>(ids.size()));
        args.push_back({true, it->second, nullptr});
      } else {
        args.push_back({false, -1, &t.name});
      }
    }
    s.atoms.emplace_back(&a.predicate, std::move(args));
  }
  s.n_vars = ids.size();
  s.occurrences.resize(s.n_vars);
  for (std::size_t i = 0; i < s.atoms.size(); ++i)
    for (std::size_t p = 0; p < s.atoms[i].second.size(); ++p)
      if (s.atoms[i].second[p].is_var)
        s.occurrences[static_cast<std::size_t>(s.atoms[i].second[p].var)].emplace_back(i, p);
  return s;
}

std::size_t distinct(const std::vector<int>& colors) {
  std::vector<int> c = colors;
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

void refine(const Shape& s, std::vector<int>& colors) {
  std::size_t classes = distinct(colors);
  for (;;) {
    std::vector<std::string> sigs(s.n_vars);
    for (std::size_t v = 0; v < s.n_vars; ++v) {
      std::vector<std::string> occ;
      for (auto [ai, pos] : s.occurrences[v]) {
        const auto& [pred, args] = s.atoms[ai];
        std::string d = *pred + "/" + std::to_string(pos) + "(";
        for (const auto& a : args) {
          if (!a.is_var) d += "c" + *a.name;
          else if (static_cast<std::size_t>(a.var) == v) d += "*";
          else d += "v" + std::to_string(colors[static_cast<std::size_t>(a.var)]);
          d += ',';
        }
        occ.push_back(std::move(d));
      }
      std::sort(occ.begin(), occ.end());
      std::string sig = std::to_string(colors[v]) + "#";
      for (const auto& o : occ) sig += o + ";";
      sigs[v] = std::move(sig);
    }
    std::vector<std::string> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < s.n_vars; ++v)
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
    if (sorted.size() == classes) return;
    classes = sorted.size();
  }
}

std::string render(const Shape& s, const std::vector<int>& colors) {
  std::vector<std::string> atoms;
  for (const auto& [pred, args] : s.atoms) {
    std::string a = *pred + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) a += ',';
      a += args[i].is_var ? "V" + std::to_string(colors[static_cast<std::size_t>(args[i].var)]) : *args[i].name;
    }
    atoms.push_back(a + ")");
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  std::string key;
  for (const auto& a : atoms) {
    if (!key.empty()) key += ',';
    key += a;
  }
  return key;
}

std::string search(const Shape& s, std::vector<int> colors) {
  refine(s, colors);
  if (distinct(colors) == s.n_vars) return render(s, colors);
  // First colour class with more than one member.
  std::map<int, std::vector<std::size_t>> cells;
  for (std::size_t v = 0; v < s.n_vars; ++v) cells[colors[v]].push_back(v);
  const std::vector<std::size_t>* cell = nullptr;
  for (const auto& [_, members] : cells)
    if (members.size() > 1) {
      cell = &members;
      break;
    }
  std::string best;
  for (std::size_t v : *cell) {
    std::vector<int> next(colors.size());
    for (std::size_t u = 0; u < colors.size(); ++u) next[u] = 2 * colors[u];
    next[v] += 1;
    std::string key = search(s, std::move(next));
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace

std::string canonical_form(const rel::Pattern& pattern) {
  const Shape s = build(pattern);
  return search(s, std::vector<int>(s.n_vars, 0));
}

bool is_equivalent(const rel::Pattern& a, const rel::Pattern& b) {
  return rel::theta_subsumes(a.atoms, b.atoms) && rel::theta_subsumes(b.atoms, a.atoms);
}

bool is_reduced(const rel::Pattern& pattern) {
  // Duplicate atoms make the pattern trivially non-reduced as a list, but
  // matching uses set semantics, so they are ignored here.
  std::vector<rel::Atom> atoms = pattern.atoms;
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::vector<rel::Atom> rest;
    rest.reserve(atoms.size() - 1);
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (j != i) rest.push_back(atoms[j]);
    if (rel::theta_subsumes(atoms, rest)) return false;
  }
  return true;
}

}  // namespace teamseq::mining
