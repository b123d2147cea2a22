#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "aspic/analysis.hpp"
#include "aspic/datalog.hpp"
#include "aspic/theory.hpp"

namespace aspic {

/// Fresh auxiliary predicates, one per rule, drawn from the reserved "__r<k>"
/// namespace with k the rule's position in canonical order.
struct AuxNaming {
  std::map<TheoryRule, std::string> aux_of;
  std::map<std::string, TheoryRule> rule_of;

  const std::string& aux_for(const TheoryRule& r) const {
    return aux_of.at(r);
  }
};

inline AuxNaming make_aux_naming(const Theory& t) {
  AuxNaming naming;
  std::size_t k = 1;
  for (const auto& r : rules_in_canonical_order(t)) {
    std::string aux = "__r" + std::to_string(k++);
    naming.aux_of.emplace(r, aux);
    naming.rule_of.emplace(std::move(aux), r);
  }
  return naming;
}

/// The auxiliary atom of a rule carries exactly the rule's body variables,
/// in order of first occurrence over the canonical body.
inline Atom aux_atom(const TheoryRule& r, const std::string& aux_pred) {
  Atom a;
  a.predicate = aux_pred;
  for (const auto& v : variable_order(body_of(r))) {
    a.args.push_back(variable(v));
  }
  return a;
}

namespace detail {

/// Contrary atoms of a defeasible element, instantiated by matching the
/// (constant-free) subject of each contrary expression against the element
/// atom and renaming the contraries accordingly. Elements whose terms do
/// not match a subject consistently contribute nothing.
inline AtomSet contraries_of_element(const Atom& element,
                                     const std::set<ContraryExpr>& contraries) {
  AtomSet out;
  for (const auto& c : contraries) {
    if (c.subject.predicate != element.predicate ||
        c.subject.arity() != element.arity()) {
      continue;
    }
    Substitution rename;
    bool ok = true;
    for (std::size_t i = 0; i < element.args.size() && ok; ++i) {
      const Term& v = c.subject.args[i];
      if (!v.is_variable()) {  // subjects are constant-free in valid theories
        ok = v == element.args[i];
        continue;
      }
      auto [it, inserted] = rename.emplace(v.name, element.args[i]);
      ok = inserted || it->second == element.args[i];
    }
    if (!ok) continue;
    for (const auto& a : c.contraries) out.insert(substitute(a, rename));
  }
  return out;
}

}  // namespace detail

/// Transformation of one rule into Datalog, negation-free: body -> aux,
/// aux -> head, and for a defeasible rule additionally aux -> name.
inline std::set<DatalogRule> transform1_rule(const TheoryRule& r,
                                             const std::string& aux_pred) {
  const Atom aux = aux_atom(r, aux_pred);
  std::set<DatalogRule> out;
  out.insert({aux, body_of(r), {}});
  out.insert({head_of(r), {aux}, {}});
  if (is_defeasible(r)) {
    out.insert({std::get<DefeasibleRule>(r).name, {aux}, {}});
  }
  return out;
}

struct TransformResult {
  DatalogProgram program;
  AuxNaming naming;
};

inline TransformResult transform1_theory(const Theory& t) {
  AuxNaming naming = make_aux_naming(t);
  std::set<DatalogRule> rules;
  for (const auto& [rule, aux] : naming.aux_of) {
    auto part = transform1_rule(rule, aux);
    rules.insert(part.begin(), part.end());
  }
  for (const auto& a : t.facts) rules.insert({a, {}, {}});
  for (const auto& a : t.assumptions) rules.insert({a, {}, {}});
  return {DatalogProgram(std::move(rules)), std::move(naming)};
}

/// As transform1_rule, but the body rule additionally requires that no
/// non-approximated contrary of the rule's defeasible elements (its name and
/// head) is derivable. Strict rules have no defeasible elements and
/// translate exactly as under Transformation 1.
inline std::set<DatalogRule> transform2_rule(
    const TheoryRule& r, const std::string& aux_pred,
    const std::set<std::string>& non_approximated,
    const std::set<ContraryExpr>& contraries) {
  const Atom aux = aux_atom(r, aux_pred);
  std::set<DatalogRule> out;
  AtomSet negatives;
  if (is_defeasible(r)) {
    const auto& dr = std::get<DefeasibleRule>(r);
    for (const Atom* element : {&dr.name, &dr.head}) {
      for (const auto& a :
           detail::contraries_of_element(*element, contraries)) {
        if (non_approximated.count(a.predicate)) negatives.insert(a);
      }
    }
  }
  out.insert({aux, body_of(r), std::move(negatives)});
  out.insert({head_of(r), {aux}, {}});
  if (is_defeasible(r)) {
    out.insert({std::get<DefeasibleRule>(r).name, {aux}, {}});
  }
  return out;
}

/// Assumptions translate like defeasible rules: the atom is derivable only
/// while none of its non-approximated contraries is.
inline DatalogRule transform2_assumption(
    const Atom& assumption, const std::set<std::string>& non_approximated,
    const std::set<ContraryExpr>& contraries) {
  AtomSet negatives;
  for (const auto& a :
       detail::contraries_of_element(assumption, contraries)) {
    if (non_approximated.count(a.predicate)) negatives.insert(a);
  }
  return {assumption, {}, std::move(negatives)};
}

inline TransformResult transform2_theory(const Theory& t) {
  const auto approx = approximated_predicates(t);
  std::set<std::string> non_approx;
  {
    std::set<std::string> all;
    detail::collect_predicates(t, all);
    for (const auto& p : all) {
      if (!approx.count(p)) non_approx.insert(p);
    }
  }

  AuxNaming naming = make_aux_naming(t);
  std::set<DatalogRule> rules;
  for (const auto& [rule, aux] : naming.aux_of) {
    auto part = transform2_rule(rule, aux, non_approx, t.contraries);
    rules.insert(part.begin(), part.end());
  }
  for (const auto& a : t.facts) rules.insert({a, {}, {}});
  for (const auto& a : t.assumptions) {
    rules.insert(transform2_assumption(a, non_approx, t.contraries));
  }

  TransformResult result{DatalogProgram(std::move(rules)), std::move(naming)};
  // Only non-approximated predicates are negated, which guarantees
  // stratified negation; anything else is a defect in the analysis.
  try {
    stratify(result.program);
  } catch (const not_stratifiable& e) {
    throw std::logic_error(
        std::string("transformed program is not stratifiable: ") + e.what());
  }
  return result;
}

}  // namespace aspic
