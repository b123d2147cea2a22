#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace aspic {

/// A term is a constant or a variable. The two are distinguished lexically:
/// variables match [A-Z][A-Za-z0-9_]*, constants [a-z][A-Za-z0-9_]* or
/// [0-9]+. Function symbols are not supported.
struct Term {
  enum class Kind { constant, variable };

  Kind kind = Kind::constant;
  std::string name;

  bool is_variable() const noexcept { return kind == Kind::variable; }
  bool is_constant() const noexcept { return kind == Kind::constant; }

  auto operator<=>(const Term&) const = default;
};

inline Term constant(std::string name) {
  return Term{Term::Kind::constant, std::move(name)};
}

inline Term variable(std::string name) {
  return Term{Term::Kind::variable, std::move(name)};
}

/// Classifies an identifier by its first character, per the surface grammar.
inline Term term_from_token(std::string name) {
  const bool var = !name.empty() && name.front() >= 'A' && name.front() <= 'Z';
  return Term{var ? Term::Kind::variable : Term::Kind::constant,
              std::move(name)};
}

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool ground() const noexcept {
    for (const auto& t : args) {
      if (t.is_variable()) return false;
    }
    return true;
  }

  std::size_t arity() const noexcept { return args.size(); }

  auto operator<=>(const Atom&) const = default;
};

using AtomSet = std::set<Atom>;

inline std::string to_text(const Term& t) { return t.name; }

inline std::string to_text(const Atom& a) {
  if (a.args.empty()) return a.predicate;
  std::string s = a.predicate;
  s += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) s += ',';
    s += a.args[i].name;
  }
  s += ')';
  return s;
}

inline std::string to_text(const AtomSet& atoms, const char* sep = ", ") {
  std::string s;
  const char* d = "";
  for (const auto& a : atoms) {
    s += d;
    s += to_text(a);
    d = sep;
  }
  return s;
}

/// Maps variable names to (constant) terms.
using Substitution = std::map<std::string, Term>;

inline Atom substitute(const Atom& a, const Substitution& s) {
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) {
    if (t.is_variable()) {
      auto it = s.find(t.name);
      out.args.push_back(it != s.end() ? it->second : t);
    } else {
      out.args.push_back(t);
    }
  }
  return out;
}

inline AtomSet substitute(const AtomSet& atoms, const Substitution& s) {
  AtomSet out;
  for (const auto& a : atoms) out.insert(substitute(a, s));
  return out;
}

/// One-way matching of `pattern` against the ground atom `target`,
/// extending `subst`. On failure `subst` is left untouched.
inline bool match(const Atom& pattern, const Atom& target,
                  Substitution& subst) {
  if (pattern.predicate != target.predicate ||
      pattern.args.size() != target.args.size()) {
    return false;
  }
  Substitution trial = subst;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    const Term& p = pattern.args[i];
    const Term& t = target.args[i];
    if (p.is_constant()) {
      if (p != t) return false;
    } else {
      auto [it, inserted] = trial.emplace(p.name, t);
      if (!inserted && it->second != t) return false;
    }
  }
  subst = std::move(trial);
  return true;
}

inline void collect_variables(const Atom& a, std::set<std::string>& out) {
  for (const auto& t : a.args) {
    if (t.is_variable()) out.insert(t.name);
  }
}

inline std::set<std::string> variables_of(const Atom& a) {
  std::set<std::string> out;
  collect_variables(a, out);
  return out;
}

inline std::set<std::string> variables_of(const AtomSet& atoms) {
  std::set<std::string> out;
  for (const auto& a : atoms) collect_variables(a, out);
  return out;
}

inline void collect_constants(const Atom& a, std::set<std::string>& out) {
  for (const auto& t : a.args) {
    if (t.is_constant()) out.insert(t.name);
  }
}

inline bool has_constants(const Atom& a) {
  for (const auto& t : a.args) {
    if (t.is_constant()) return true;
  }
  return false;
}

/// Variables in order of first occurrence, scanning the (sorted) atom set
/// left to right. Used for auxiliary-predicate argument lists.
inline std::vector<std::string> variable_order(const AtomSet& atoms) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    for (const auto& t : a.args) {
      if (t.is_variable() && seen.insert(t.name).second) {
        order.push_back(t.name);
      }
    }
  }
  return order;
}

}  // namespace aspic
