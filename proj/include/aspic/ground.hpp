#pragma once

#include <set>
#include <string>
#include <vector>

#include "aspic/analysis.hpp"
#include "aspic/datalog.hpp"
#include "aspic/errors.hpp"
#include "aspic/naive.hpp"
#include "aspic/theory.hpp"
#include "aspic/transform.hpp"

namespace aspic {

enum class GroundMode { naive, t1, t2, full };

inline const char* to_text(GroundMode m) {
  switch (m) {
    case GroundMode::naive: return "naive";
    case GroundMode::t1: return "t1";
    case GroundMode::t2: return "t2";
    case GroundMode::full: return "full";
  }
  return "?";
}

namespace detail {

/// The substitution encoded by one answer to the rule's auxiliary query.
inline Substitution substitution_from_answer(const TheoryRule& rule,
                                             const Atom& answer) {
  const auto vars = variable_order(body_of(rule));
  Substitution s;
  for (std::size_t i = 0; i < vars.size() && i < answer.args.size(); ++i) {
    s.emplace(vars[i], answer.args[i]);
  }
  return s;
}

}  // namespace detail

/// Grounds one rule from the answers to its auxiliary-predicate query: each
/// answer fixes a total substitution for the rule's variables.
inline std::set<StrictRule> ground_rule_via_queries(const StrictRule& rule,
                                                    const DatalogProgram& program,
                                                    const AuxNaming& naming) {
  std::set<StrictRule> out;
  const TheoryRule key{rule};
  for (const auto& answer : query(program, naming.aux_for(key))) {
    const auto s = detail::substitution_from_answer(key, answer);
    out.insert({substitute(rule.body, s), substitute(rule.head, s)});
  }
  return out;
}

inline std::set<DefeasibleRule> ground_rule_via_queries(
    const DefeasibleRule& rule, const DatalogProgram& program,
    const AuxNaming& naming) {
  std::set<DefeasibleRule> out;
  const TheoryRule key{rule};
  for (const auto& answer : query(program, naming.aux_for(key))) {
    const auto s = detail::substitution_from_answer(key, answer);
    out.insert({substitute(rule.name, s), substitute(rule.body, s), substitute(rule.head, s)});
  }
  return out;
}

/// Grounds each contrary expression by querying its subject predicate.
inline std::set<ContraryExpr> ground_contraries(
    const std::set<ContraryExpr>& contraries, const DatalogProgram& program) {
  std::set<ContraryExpr> out;
  for (const auto& c : contraries) {
    for (const auto& answer : query(program, c.subject.predicate)) {
      Substitution s;
      if (!match(c.subject, answer, s)) continue;
      out.insert(
          ContraryExpr{substitute(c.subject, s), substitute(c.contraries, s)});
    }
  }
  return out;
}

/// Assumptions that remain derivable. Under Transformation 1 every
/// assumption is its own empty-bodied rule, so this is the identity there;
/// under Transformation 2 it filters out refuted assumptions.
inline AtomSet ground_assumptions(const AtomSet& assumptions,
                                  const DatalogProgram& program) {
  AtomSet out;
  std::set<std::string> preds;
  for (const auto& a : assumptions) preds.insert(a.predicate);
  for (const auto& p : preds) {
    for (const auto& derived : query(program, p)) {
      if (assumptions.count(derived)) out.insert(derived);
    }
  }
  return out;
}

namespace detail {

struct QueryGrounding {
  std::set<StrictRule> strict;
  std::set<DefeasibleRule> defeasible;
};

inline QueryGrounding ground_rules_via_queries(const Theory& t,
                                               const TransformResult& tr,
                                               std::size_t budget) {
  QueryGrounding g;
  std::size_t produced = 0;
  auto charge = [&](std::size_t n) {
    produced += n;
    if (produced > budget) throw budget_exceeded("ground instance", budget);
  };
  for (const auto& r : t.strict) {
    auto inst = ground_rule_via_queries(r, tr.program, tr.naming);
    charge(inst.size());
    g.strict.insert(inst.begin(), inst.end());
  }
  for (const auto& r : t.defeasible) {
    auto inst = ground_rule_via_queries(r, tr.program, tr.naming);
    charge(inst.size());
    g.defeasible.insert(inst.begin(), inst.end());
  }
  return g;
}

}  // namespace detail

/// Grounding of an entire theory via per-component grounding plus fact
/// promotion: strict rules whose body atoms are all (possibly promoted)
/// facts and whose head is not an assumption turn into facts and disappear.
inline GroundTheory ground_theory_full(const Theory& t,
                                       std::size_t budget = kDefaultNaiveBudget) {
  const TransformResult tr = transform2_theory(t);
  const SccOrder order = rule_scc_order(t);

  GroundTheory out;
  out.facts = t.facts;

  std::size_t produced = 0;
  auto charge = [&](std::size_t n) {
    produced += n;
    if (produced > budget) throw budget_exceeded("ground instance", budget);
  };

  for (const auto& component : order.components) {
    std::set<StrictRule> strict_here;
    for (const auto& rule : component) {
      if (is_defeasible(rule)) {
        auto inst = ground_rule_via_queries(std::get<DefeasibleRule>(rule),
                                            tr.program, tr.naming);
        charge(inst.size());
        out.defeasible.insert(inst.begin(), inst.end());
      } else {
        auto inst = ground_rule_via_queries(std::get<StrictRule>(rule),
                                            tr.program, tr.naming);
        charge(inst.size());
        strict_here.insert(inst.begin(), inst.end());
      }
    }
    // Promote until no new facts are produced.
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = strict_here.begin(); it != strict_here.end();) {
        bool body_is_facts = true;
        for (const auto& a : it->body) {
          if (!out.facts.count(a)) {
            body_is_facts = false;
            break;
          }
        }
        if (body_is_facts && !t.assumptions.count(it->head)) {
          out.facts.insert(it->head);
          it = strict_here.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    out.strict.insert(strict_here.begin(), strict_here.end());
  }

  out.assumptions = ground_assumptions(t.assumptions, tr.program);
  out.contraries = ground_contraries(t.contraries, tr.program);
  return out;
}

/// Grounds a theory in the requested mode. One Datalog model is computed per
/// call and shared by every rule, contrary and assumption query.
inline GroundTheory ground_theory(const Theory& t, GroundMode mode,
                                  std::size_t budget = kDefaultNaiveBudget) {
  switch (mode) {
    case GroundMode::naive:
      return naive_ground_theory(t, budget);
    case GroundMode::full:
      return ground_theory_full(t, budget);
    case GroundMode::t1:
    case GroundMode::t2: {
      const TransformResult tr = mode == GroundMode::t1 ? transform1_theory(t)
                                                        : transform2_theory(t);
      auto rules = detail::ground_rules_via_queries(t, tr, budget);
      GroundTheory out;
      out.strict = std::move(rules.strict);
      out.defeasible = std::move(rules.defeasible);
      out.contraries = ground_contraries(t.contraries, tr.program);
      out.facts = t.facts;
      out.assumptions = mode == GroundMode::t1
                            ? t.assumptions
                            : ground_assumptions(t.assumptions, tr.program);
      return out;
    }
  }
  throw std::logic_error("unreachable ground mode");
}

}  // namespace aspic
