#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aspic/errors.hpp"
#include "aspic/theory.hpp"

namespace aspic {

inline constexpr std::size_t kDefaultArgBudget = 100000;

enum class AttackKind { undercut, rebut, undermine };

inline const char* to_text(AttackKind k) {
  switch (k) {
    case AttackKind::undercut: return "undercut";
    case AttackKind::rebut: return "rebut";
    case AttackKind::undermine: return "undermine";
  }
  return "?";
}

/// A ground rule as applied inside arguments; `name` is meaningful only for
/// defeasible rules.
struct GroundRule {
  bool defeasible = false;
  Atom name;
  AtomSet body;
  Atom head;

  bool operator==(const GroundRule&) const = default;
  bool operator<(const GroundRule& o) const {
    if (defeasible != o.defeasible) return defeasible < o.defeasible;
    if (name != o.name) return name < o.name;
    if (head != o.head) return head < o.head;
    return body < o.body;
  }
};

/// A derivation tree: either a knowledge-base leaf or a rule application
/// whose children conclude exactly the rule's body atoms. Derived data is
/// cached at construction; nodes are immutable afterwards.
struct Argument {
  Atom conclusion;
  int rule = -1;              // index into ArgumentSet::rules, -1 for a leaf
  bool assumption = false;    // leaf drawn from the assumption base
  std::vector<int> children;  // aligned with the rule body in sorted order

  AtomSet premises;            // leaf atoms of the subtree
  AtomSet assumption_premises; // premises that are assumptions
  std::set<int> rules_used;    // rule indices applied anywhere in the subtree
  AtomSet tree_conclusions;    // conclusions of every node in the subtree
  std::string text;            // canonical printed form

  bool leaf() const noexcept { return rule < 0; }
};

/// All arguments of a ground theory, closed under sub-arguments, in
/// canonical order (leaves first, then by printed form).
struct ArgumentSet {
  std::vector<GroundRule> rules;
  std::vector<Argument> arguments;

  const Atom& top_rule_name(int id) const {
    return rules[arguments[id].rule].name;
  }
};

namespace detail {

inline std::string argument_text(const std::vector<Argument>& args,
                                 const std::vector<int>& children,
                                 const GroundRule& rule) {
  std::string s = "[";
  const char* sep = "";
  for (int c : children) {
    s += sep;
    s += args[c].text;
    sep = ", ";
  }
  s += rule.defeasible ? " => " : " -> ";
  s += to_text(rule.head);
  s += "]";
  return s;
}

}  // namespace detail

/// Builds every argument of the ground theory. Arguments repeating a
/// conclusion along a root-to-leaf path are excluded, which keeps the set
/// finite under cyclic ground rules while preserving all conclusions; on
/// theories without cyclic rule dependencies the restriction never fires
/// (`repeat_policy` exists so tests can verify exactly that).
inline ArgumentSet construct_arguments(const GroundTheory& gt,
                                       std::size_t budget = kDefaultArgBudget,
                                       bool repeat_policy = true) {
  if (!is_ground(gt)) {
    throw std::invalid_argument("argument construction needs a ground theory");
  }
  ArgumentSet out;
  for (const auto& r : gt.strict) {
    out.rules.push_back({false, Atom{}, r.body, r.head});
  }
  for (const auto& r : gt.defeasible) {
    out.rules.push_back({true, r.name, r.body, r.head});
  }

  auto& args = out.arguments;
  std::map<Atom, std::vector<int>> by_conclusion;
  std::map<std::pair<int, std::vector<int>>, int> consed;

  auto add_leaf = [&](const Atom& atom, bool assumption) {
    Argument a;
    a.conclusion = atom;
    a.assumption = assumption;
    a.premises = {atom};
    if (assumption) a.assumption_premises = {atom};
    a.tree_conclusions = {atom};
    a.text = to_text(atom);
    by_conclusion[atom].push_back(static_cast<int>(args.size()));
    args.push_back(std::move(a));
  };
  for (const auto& atom : gt.facts) add_leaf(atom, false);
  for (const auto& atom : gt.assumptions) add_leaf(atom, true);

  // Saturate: keep applying rules to existing arguments until no new tree
  // appears. Hash-consing keeps sub-argument sharing free.
  bool grew = true;
  while (grew) {
    grew = false;
    for (int ri = 0; ri < static_cast<int>(out.rules.size()); ++ri) {
      const GroundRule& rule = out.rules[ri];
      const std::vector<Atom> body(rule.body.begin(), rule.body.end());
      std::vector<const std::vector<int>*> candidates;
      candidates.reserve(body.size());
      bool feasible = true;
      for (const auto& b : body) {
        auto it = by_conclusion.find(b);
        if (it == by_conclusion.end()) {
          feasible = false;
          break;
        }
        candidates.push_back(&it->second);
      }
      if (!feasible) continue;

      std::vector<Argument> pending;
      std::vector<int> choice(body.size(), 0);
      std::vector<int> children(body.size(), 0);
      // Odometer over the candidate lists.
      while (true) {
        for (std::size_t i = 0; i < body.size(); ++i) {
          children[i] = (*candidates[i])[choice[i]];
        }
        if (!consed.count({ri, children})) {
          bool admissible_tree = true;
          if (repeat_policy) {
            for (int c : children) {
              if (args[c].tree_conclusions.count(rule.head)) {
                admissible_tree = false;
                break;
              }
            }
          }
          if (admissible_tree) {
            Argument a;
            a.conclusion = rule.head;
            a.rule = ri;
            a.children = children;
            a.rules_used.insert(ri);
            a.tree_conclusions.insert(rule.head);
            for (int c : children) {
              a.premises.insert(args[c].premises.begin(),
                                args[c].premises.end());
              a.assumption_premises.insert(args[c].assumption_premises.begin(),
                                           args[c].assumption_premises.end());
              a.rules_used.insert(args[c].rules_used.begin(),
                                  args[c].rules_used.end());
              a.tree_conclusions.insert(args[c].tree_conclusions.begin(),
                                        args[c].tree_conclusions.end());
            }
            a.text = detail::argument_text(args, children, rule);
            consed.emplace(std::make_pair(ri, children),
                           static_cast<int>(args.size()) +
                               static_cast<int>(pending.size()));
            pending.push_back(std::move(a));
            if (args.size() + pending.size() > budget) {
              throw budget_exceeded("argument", budget);
            }
          }
        }
        // advance odometer
        std::size_t i = 0;
        for (; i < body.size(); ++i) {
          if (++choice[i] < static_cast<int>(candidates[i]->size())) break;
          choice[i] = 0;
        }
        if (i == body.size()) break;
      }
      for (auto& a : pending) {
        by_conclusion[a.conclusion].push_back(static_cast<int>(args.size()));
        args.push_back(std::move(a));
        grew = true;
      }
    }
  }

  // Canonical order: leaves first, then by printed form; remap children.
  std::vector<int> order(args.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (args[a].leaf() != args[b].leaf()) return args[a].leaf();
    return args[a].text < args[b].text;
  });
  std::vector<int> new_id(args.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    new_id[order[pos]] = static_cast<int>(pos);
  }
  std::vector<Argument> sorted;
  sorted.reserve(args.size());
  for (int old : order) sorted.push_back(std::move(args[old]));
  for (auto& a : sorted) {
    for (int& c : a.children) c = new_id[c];
  }
  out.arguments = std::move(sorted);
  return out;
}

/// Ids of the argument and all its subtrees.
inline std::set<int> sub_arguments(const ArgumentSet& set, int id) {
  std::set<int> out;
  std::vector<int> stack{id};
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    if (!out.insert(cur).second) continue;
    for (int c : set.arguments[cur].children) stack.push_back(c);
  }
  return out;
}

/// An attackable element of an argument, with the attack kind an attacker
/// would score on it.
struct WeakPoint {
  Atom atom;
  AttackKind kind;

  bool operator==(const WeakPoint&) const = default;
  bool operator<(const WeakPoint& o) const {
    if (atom != o.atom) return atom < o.atom;
    return kind < o.kind;
  }
};

/// Assumption premises plus, per defeasible rule used, its name (undercut)
/// and head (rebut).
inline std::set<WeakPoint> weak_points(const ArgumentSet& set, int id) {
  std::set<WeakPoint> out;
  const Argument& a = set.arguments[id];
  for (const auto& atom : a.assumption_premises) {
    out.insert({atom, AttackKind::undermine});
  }
  for (int ri : a.rules_used) {
    const GroundRule& r = set.rules[ri];
    if (!r.defeasible) continue;
    out.insert({r.name, AttackKind::undercut});
    out.insert({r.head, AttackKind::rebut});
  }
  return out;
}

struct Attack {
  int attacker = 0;
  int target = 0;
  AttackKind kind = AttackKind::undermine;
  Atom element;  // the weak point the attack lands on

  bool operator==(const Attack&) const = default;
  bool operator<(const Attack& o) const {
    if (attacker != o.attacker) return attacker < o.attacker;
    if (target != o.target) return target < o.target;
    if (kind != o.kind) return kind < o.kind;
    return element < o.element;
  }
};

struct AttackGraph {
  ArgumentSet arguments;
  std::vector<Attack> attacks;

  std::size_t size() const { return arguments.arguments.size(); }

  std::set<std::pair<int, int>> attack_pairs() const {
    std::set<std::pair<int, int>> out;
    for (const auto& a : attacks) out.emplace(a.attacker, a.target);
    return out;
  }
};

/// A attacks A' iff the conclusion of A is a contrary of one of A''s weak
/// points.
inline AttackGraph compute_attacks(ArgumentSet set, const GroundTheory& gt) {
  AttackGraph g;
  std::map<Atom, AtomSet> contraries_of;
  for (const auto& c : gt.contraries) {
    contraries_of[c.subject].insert(c.contraries.begin(), c.contraries.end());
  }
  std::map<Atom, std::vector<int>> by_conclusion;
  for (int i = 0; i < static_cast<int>(set.arguments.size()); ++i) {
    by_conclusion[set.arguments[i].conclusion].push_back(i);
  }

  std::set<Attack> attacks;
  for (int target = 0; target < static_cast<int>(set.arguments.size());
       ++target) {
    for (const auto& wp : weak_points(set, target)) {
      auto cit = contraries_of.find(wp.atom);
      if (cit == contraries_of.end()) continue;
      for (const auto& contrary : cit->second) {
        auto ait = by_conclusion.find(contrary);
        if (ait == by_conclusion.end()) continue;
        for (int attacker : ait->second) {
          attacks.insert({attacker, target, wp.kind, wp.atom});
        }
      }
    }
  }
  g.arguments = std::move(set);
  g.attacks.assign(attacks.begin(), attacks.end());
  return g;
}

inline AttackGraph induced_af(const GroundTheory& gt,
                              std::size_t budget = kDefaultArgBudget) {
  return compute_attacks(construct_arguments(gt, budget), gt);
}

/// ICCMA-style dump: one arg(Ai) line per argument (conclusion as a
/// comment), one att(Ai,Aj) line per attack pair.
inline std::string to_iccma(const AttackGraph& g) {
  std::string s;
  for (std::size_t i = 0; i < g.arguments.arguments.size(); ++i) {
    s += "arg(A" + std::to_string(i + 1) + "). # " +
         g.arguments.arguments[i].text + "\n";
  }
  for (const auto& [from, to] : g.attack_pairs()) {
    s += "att(A" + std::to_string(from + 1) + ",A" + std::to_string(to + 1) +
         ").\n";
  }
  return s;
}

}  // namespace aspic
