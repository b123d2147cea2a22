#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "aspic/atoms.hpp"

namespace aspic {

/// Declares the atoms that conflict with `subject`. Constant-free by
/// definition; every variable of a contrary atom occurs in the subject.
struct ContraryExpr {
  Atom subject;
  AtomSet contraries;

  bool operator==(const ContraryExpr&) const = default;
  bool operator<(const ContraryExpr& o) const {
    if (subject != o.subject) return subject < o.subject;
    return contraries < o.contraries;
  }
};

struct StrictRule {
  AtomSet body;
  Atom head;

  bool operator==(const StrictRule&) const = default;
  bool operator<(const StrictRule& o) const {
    if (head != o.head) return head < o.head;
    return body < o.body;
  }
};

struct DefeasibleRule {
  Atom name;
  AtomSet body;
  Atom head;

  bool operator==(const DefeasibleRule&) const = default;
  bool operator<(const DefeasibleRule& o) const {
    if (name != o.name) return name < o.name;
    if (head != o.head) return head < o.head;
    return body < o.body;
  }
};

/// Either kind of inference rule, where a uniform view is convenient
/// (dependency analysis, aux naming, grounding).
using TheoryRule = std::variant<StrictRule, DefeasibleRule>;

inline const AtomSet& body_of(const TheoryRule& r) {
  return std::holds_alternative<StrictRule>(r)
             ? std::get<StrictRule>(r).body
             : std::get<DefeasibleRule>(r).body;
}

inline const Atom& head_of(const TheoryRule& r) {
  return std::holds_alternative<StrictRule>(r)
             ? std::get<StrictRule>(r).head
             : std::get<DefeasibleRule>(r).head;
}

inline bool is_defeasible(const TheoryRule& r) {
  return std::holds_alternative<DefeasibleRule>(r);
}

struct Theory {
  std::set<ContraryExpr> contraries;
  std::set<StrictRule> strict;
  std::set<DefeasibleRule> defeasible;
  AtomSet facts;
  AtomSet assumptions;

  bool operator==(const Theory&) const = default;
};

/// A Theory whose atoms are all ground. Producers enforce the invariant;
/// consumers may re-check with is_ground().
using GroundTheory = Theory;

// ---------------------------------------------------------------------------
// Printing (canonical; drives golden files and deterministic orderings)

inline std::string to_text(const StrictRule& r) {
  std::string s = to_text(r.head);
  s += " <- ";
  s += to_text(r.body);
  return s;
}

inline std::string to_text(const DefeasibleRule& r) {
  std::string s = to_text(r.name);
  s += ": ";
  s += to_text(r.head);
  s += " <= ";
  s += to_text(r.body);
  return s;
}

inline std::string to_text(const ContraryExpr& c) {
  std::string s = "contrary ";
  s += to_text(c.subject);
  s += ": ";
  s += to_text(c.contraries);
  return s;
}

inline std::string to_text(const TheoryRule& r) {
  return std::holds_alternative<StrictRule>(r)
             ? to_text(std::get<StrictRule>(r))
             : to_text(std::get<DefeasibleRule>(r));
}

/// Renders a theory in the surface grammar: contraries, strict rules,
/// defeasible rules, assumptions, facts, each section sorted.
inline std::string to_text(const Theory& t) {
  std::string s;
  for (const auto& c : t.contraries) s += to_text(c) + ".\n";
  for (const auto& r : t.strict) s += to_text(r) + ".\n";
  for (const auto& r : t.defeasible) s += to_text(r) + ".\n";
  for (const auto& a : t.assumptions) s += "assume " + to_text(a) + ".\n";
  for (const auto& a : t.facts) s += "fact " + to_text(a) + ".\n";
  return s;
}

// ---------------------------------------------------------------------------
// Well-formedness

struct Violation {
  std::string message;
  std::string element;

  bool operator==(const Violation&) const = default;
};

inline std::string to_text(const Violation& v) {
  return v.message + ": " + v.element;
}

namespace detail {

inline bool lexically_valid(const Term& t) {
  if (t.name.empty()) return false;
  const char c = t.name.front();
  const bool upper = c >= 'A' && c <= 'Z';
  const bool lower = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  return t.is_variable() ? upper : lower;
}

inline void check_lexical(const Atom& a, const std::string& where,
                          std::vector<Violation>& out) {
  for (const auto& t : a.args) {
    if (!lexically_valid(t)) {
      out.push_back({"term '" + t.name + "' does not match its lexical class",
                     where + " " + to_text(a)});
    }
  }
}

inline void check_arity(const Atom& a, std::map<std::string, std::size_t>& seen,
                        std::vector<Violation>& out) {
  auto [it, inserted] = seen.emplace(a.predicate, a.arity());
  if (!inserted && it->second != a.arity()) {
    out.push_back({"predicate '" + a.predicate + "' used with arities " +
                       std::to_string(it->second) + " and " +
                       std::to_string(a.arity()),
                   to_text(a)});
  }
}

}  // namespace detail

/// Reports every violated structural invariant; an empty result means the
/// theory is accepted by the whole pipeline.
inline std::vector<Violation> validate(const Theory& t) {
  std::vector<Violation> out;
  std::map<std::string, std::size_t> arity;

  auto visit_atom = [&](const Atom& a, const std::string& where) {
    detail::check_arity(a, arity, out);
    detail::check_lexical(a, where, out);
  };

  for (const auto& c : t.contraries) {
    visit_atom(c.subject, "contrary expression");
    if (c.contraries.empty()) {
      out.push_back({"contrary expression with empty contrary set",
                     to_text(c.subject)});
    }
    if (has_constants(c.subject)) {
      out.push_back({"constant in contrary expression", to_text(c)});
    }
    const auto subject_vars = variables_of(c.subject);
    for (const auto& a : c.contraries) {
      visit_atom(a, "contrary expression");
      if (has_constants(a)) {
        out.push_back({"constant in contrary expression", to_text(c)});
      }
      for (const auto& v : variables_of(a)) {
        if (!subject_vars.count(v)) {
          out.push_back({"unsafe contrary expression: variable '" + v +
                             "' not in subject",
                         to_text(c)});
        }
      }
    }
  }

  for (const auto& r : t.strict) {
    visit_atom(r.head, "strict rule");
    for (const auto& a : r.body) visit_atom(a, "strict rule");
    const auto body_vars = variables_of(r.body);
    for (const auto& v : variables_of(r.head)) {
      if (!body_vars.count(v)) {
        out.push_back({"unsafe rule: head variable '" + v + "' not in body",
                       to_text(r)});
      }
    }
  }

  std::map<std::string, std::size_t> name_uses;
  for (const auto& r : t.defeasible) {
    visit_atom(r.name, "defeasible rule");
    visit_atom(r.head, "defeasible rule");
    for (const auto& a : r.body) visit_atom(a, "defeasible rule");
    const auto body_vars = variables_of(r.body);
    for (const auto& v : variables_of(r.head)) {
      if (!body_vars.count(v)) {
        out.push_back({"unsafe rule: head variable '" + v + "' not in body",
                       to_text(r)});
      }
    }
    for (const auto& v : variables_of(r.name)) {
      if (!body_vars.count(v)) {
        out.push_back({"unsafe rule: name variable '" + v + "' not in body",
                       to_text(r)});
      }
    }
    ++name_uses[r.name.predicate];
  }
  for (const auto& [pred, uses] : name_uses) {
    if (uses > 1) {
      out.push_back({"rule name predicate '" + pred + "' names " +
                         std::to_string(uses) + " rules",
                     pred});
    }
  }

  for (const auto& a : t.facts) {
    visit_atom(a, "fact");
    if (!a.ground()) out.push_back({"non-ground fact", to_text(a)});
    if (t.assumptions.count(a)) {
      out.push_back({"atom is both fact and assumption", to_text(a)});
    }
  }
  for (const auto& a : t.assumptions) {
    visit_atom(a, "assumption");
    if (!a.ground()) out.push_back({"non-ground assumption", to_text(a)});
  }

  return out;
}

inline bool is_ground(const Theory& t) {
  for (const auto& c : t.contraries) {
    if (!c.subject.ground()) return false;
    for (const auto& a : c.contraries) {
      if (!a.ground()) return false;
    }
  }
  for (const auto& r : t.strict) {
    if (!r.head.ground()) return false;
    for (const auto& a : r.body) {
      if (!a.ground()) return false;
    }
  }
  for (const auto& r : t.defeasible) {
    if (!r.name.ground() || !r.head.ground()) return false;
    for (const auto& a : r.body) {
      if (!a.ground()) return false;
    }
  }
  for (const auto& a : t.facts) {
    if (!a.ground()) return false;
  }
  for (const auto& a : t.assumptions) {
    if (!a.ground()) return false;
  }
  return true;
}

/// All constants occurring anywhere in the theory.
inline std::set<std::string> herbrand_universe(const Theory& t) {
  std::set<std::string> out;
  auto visit = [&](const Atom& a) { collect_constants(a, out); };
  for (const auto& c : t.contraries) {
    visit(c.subject);
    for (const auto& a : c.contraries) visit(a);
  }
  for (const auto& r : t.strict) {
    visit(r.head);
    for (const auto& a : r.body) visit(a);
  }
  for (const auto& r : t.defeasible) {
    visit(r.name);
    visit(r.head);
    for (const auto& a : r.body) visit(a);
  }
  for (const auto& a : t.facts) visit(a);
  for (const auto& a : t.assumptions) visit(a);
  return out;
}

/// Rules of the theory in canonical order: strict rules first, then
/// defeasible, each sorted. Fixes auxiliary-predicate numbering.
inline std::vector<TheoryRule> rules_in_canonical_order(const Theory& t) {
  std::vector<TheoryRule> rules;
  rules.reserve(t.strict.size() + t.defeasible.size());
  for (const auto& r : t.strict) rules.emplace_back(r);
  for (const auto& r : t.defeasible) rules.emplace_back(r);
  return rules;
}

}  // namespace aspic
