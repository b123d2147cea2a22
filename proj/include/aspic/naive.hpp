#pragma once

#include <cstddef>
#include <type_traits>
#include <set>
#include <string>
#include <vector>

#include "aspic/errors.hpp"
#include "aspic/theory.hpp"

namespace aspic {

inline constexpr std::size_t kDefaultNaiveBudget = 1000000;

// Reference grounding by exhaustive substitution over the Herbrand universe.
// Deliberately unoptimized; it exists to be obviously correct and serves as
// the oracle the query-based groundings are checked against.

namespace detail {

template <typename Instantiate>
void enumerate_substitutions(const std::vector<std::string>& vars,
                             const std::set<std::string>& universe,
                             Substitution& subst, std::size_t depth,
                             const Instantiate& emit) {
  if (depth == vars.size()) {
    emit(subst);
    return;
  }
  for (const auto& c : universe) {
    subst[vars[depth]] = constant(c);
    enumerate_substitutions(vars, universe, subst, depth + 1, emit);
  }
  subst.erase(vars[depth]);
}

template <typename Apply>
auto naive_ground(const std::set<std::string>& vars_set,
                  const std::set<std::string>& universe, std::size_t budget,
                  const Apply& apply_subst) {
  using Rule = std::invoke_result_t<Apply, const Substitution&>;
  std::vector<std::string> vars(vars_set.begin(), vars_set.end());
  std::set<Rule> out;
  Substitution subst;
  enumerate_substitutions(vars, universe, subst, 0, [&](const Substitution& s) {
    out.insert(apply_subst(s));
    if (out.size() > budget) throw budget_exceeded("ground instance", budget);
  });
  return out;
}

}  // namespace detail

inline std::set<StrictRule> naive_ground_rule(
    const StrictRule& r, const std::set<std::string>& universe,
    std::size_t budget = kDefaultNaiveBudget) {
  std::set<std::string> vars = variables_of(r.body);
  collect_variables(r.head, vars);
  return detail::naive_ground(vars, universe, budget,
                              [&](const Substitution& s) {
                                return StrictRule{substitute(r.body, s),
                                                  substitute(r.head, s)};
                              });
}

inline std::set<DefeasibleRule> naive_ground_rule(
    const DefeasibleRule& r, const std::set<std::string>& universe,
    std::size_t budget = kDefaultNaiveBudget) {
  std::set<std::string> vars = variables_of(r.body);
  collect_variables(r.head, vars);
  collect_variables(r.name, vars);
  return detail::naive_ground(
      vars, universe, budget, [&](const Substitution& s) {
        return DefeasibleRule{substitute(r.name, s), substitute(r.body, s),
                              substitute(r.head, s)};
      });
}

inline std::set<ContraryExpr> naive_ground_rule(
    const ContraryExpr& c, const std::set<std::string>& universe,
    std::size_t budget = kDefaultNaiveBudget) {
  std::set<std::string> vars = variables_of(c.subject);
  for (const auto& a : c.contraries) collect_variables(a, vars);
  return detail::naive_ground(vars, universe, budget,
                              [&](const Substitution& s) {
                                return ContraryExpr{substitute(c.subject, s),
                                                    substitute(c.contraries, s)};
                              });
}

/// Grounds every rule and contrary expression over the theory's Herbrand
/// universe; facts and assumptions pass through unchanged.
inline GroundTheory naive_ground_theory(const Theory& t,
                                        std::size_t budget = kDefaultNaiveBudget) {
  const auto universe = herbrand_universe(t);
  GroundTheory out;
  out.facts = t.facts;
  out.assumptions = t.assumptions;
  std::size_t produced = 0;
  auto reserve = [&](std::size_t n) {
    produced += n;
    if (produced > budget) throw budget_exceeded("ground instance", budget);
  };
  for (const auto& c : t.contraries) {
    auto g = naive_ground_rule(c, universe, budget);
    reserve(g.size());
    out.contraries.insert(g.begin(), g.end());
  }
  for (const auto& r : t.strict) {
    auto g = naive_ground_rule(r, universe, budget);
    reserve(g.size());
    out.strict.insert(g.begin(), g.end());
  }
  for (const auto& r : t.defeasible) {
    auto g = naive_ground_rule(r, universe, budget);
    reserve(g.size());
    out.defeasible.insert(g.begin(), g.end());
  }
  return out;
}

}  // namespace aspic
