#pragma once

// Seeded random instances shared by the property suites and the acceptance
// runner: stratifiable/non-stratifiable Datalog programs and small acyclic
// theories.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aspic/aspic.hpp"

namespace aspic::test {

struct ProgramShape {
  int n_preds = 8;
  int max_arity = 2;
  int n_consts = 10;
  int max_rules = 30;
  int n_facts = 6;
  int levels = 3;
  bool allow_negation = true;
  bool ground_only = false;
};

/// Stratifiable by construction: predicates are pre-assigned levels, positive
/// bodies draw from equal-or-lower levels, negated atoms from strictly lower
/// ones, and safety holds because head/negative arguments reuse positive
/// body variables (or constants).
inline DatalogProgram random_stratifiable_program(std::uint64_t seed,
                                                  const ProgramShape& shape = {}) {
  SplitMix64 rng(seed);
  struct Pred {
    std::string name;
    int arity;
    int level;
  };
  std::vector<Pred> preds;
  for (int i = 0; i < shape.n_preds; ++i) {
    preds.push_back({"q" + std::to_string(i), rng.range(0, shape.max_arity),
                     rng.range(0, shape.levels - 1)});
  }
  std::vector<std::string> consts;
  for (int i = 0; i < shape.n_consts; ++i) consts.push_back(std::to_string(i));
  const std::vector<std::string> var_names{"X", "Y", "Z"};

  auto ground_atom = [&](const Pred& p) {
    Atom a;
    a.predicate = p.name;
    for (int i = 0; i < p.arity; ++i) {
      a.args.push_back(constant(consts[rng.below(consts.size())]));
    }
    return a;
  };

  std::set<DatalogRule> rules;
  for (int i = 0; i < shape.n_facts; ++i) {
    rules.insert({ground_atom(preds[rng.below(preds.size())]), {}, {}});
  }

  const int n_rules = rng.range(1, shape.max_rules);
  for (int i = 0; i < n_rules; ++i) {
    const Pred& head_pred = preds[rng.below(preds.size())];
    DatalogRule r;

    std::vector<const Pred*> lower_eq, lower;
    for (const auto& p : preds) {
      if (p.level <= head_pred.level) lower_eq.push_back(&p);
      if (p.level < head_pred.level) lower.push_back(&p);
    }
    const int body_len = rng.range(1, 3);
    std::set<std::string> body_vars;
    for (int b = 0; b < body_len; ++b) {
      const Pred& p = *lower_eq[rng.below(lower_eq.size())];
      Atom a;
      a.predicate = p.name;
      for (int k = 0; k < p.arity; ++k) {
        if (!shape.ground_only && rng.chance(0.7)) {
          const auto& v = var_names[rng.below(var_names.size())];
          a.args.push_back(variable(v));
          body_vars.insert(v);
        } else {
          a.args.push_back(constant(consts[rng.below(consts.size())]));
        }
      }
      r.positive_body.insert(std::move(a));
    }
    std::vector<std::string> scope(body_vars.begin(), body_vars.end());
    auto bound_arg = [&]() -> Term {
      if (!scope.empty() && rng.chance(0.7)) {
        return variable(scope[rng.below(scope.size())]);
      }
      return constant(consts[rng.below(consts.size())]);
    };

    r.head.predicate = head_pred.name;
    for (int k = 0; k < head_pred.arity; ++k) r.head.args.push_back(bound_arg());

    if (shape.allow_negation && !lower.empty()) {
      const int negs = rng.range(0, 2);
      for (int k = 0; k < negs; ++k) {
        const Pred& p = *lower[rng.below(lower.size())];
        Atom a;
        a.predicate = p.name;
        for (int j = 0; j < p.arity; ++j) a.args.push_back(bound_arg());
        r.negative_body.insert(std::move(a));
      }
    }
    rules.insert(std::move(r));
  }
  return DatalogProgram(std::move(rules));
}

/// A stratifiable program plus an injected all-negative cycle over fresh
/// 0-ary predicates.
inline DatalogProgram random_nonstratifiable_program(std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x5bd1e995);
  auto base = random_stratifiable_program(seed);
  std::set<DatalogRule> rules = base.rules();
  const int len = rng.range(1, 3);
  for (int i = 0; i < len; ++i) {
    Atom head{"z" + std::to_string(i), {}};
    Atom neg{"z" + std::to_string((i + 1) % len), {}};
    rules.insert({head, {}, {neg}});
  }
  return DatalogProgram(std::move(rules));
}

struct CorpusShape {
  int max_strict = 4;
  int max_defeasible = 4;
  int max_contraries = 4;
  int max_constant = 5;  // constants drawn from [1, max_constant], at most 6
  int max_kb = 6;
  std::size_t max_arguments = 14;
};

/// The seeded corpus instance for index k, or an empty optional when the
/// draw violates the corpus constraints (cyclic rule dependencies or an
/// oversized induced framework). Callers scan k upward and keep the first N
/// accepted instances.
inline std::optional<Theory> corpus_theory(std::uint64_t base_seed, int k,
                                           const CorpusShape& shape = {}) {
  SplitMix64 pick(base_seed + static_cast<std::uint64_t>(k));
  GenConfig cfg;
  cfg.seed = pick.next();
  cfg.n_strict = static_cast<int>(pick.below(shape.max_strict + 1));
  cfg.n_defeasible = static_cast<int>(pick.below(shape.max_defeasible + 1));
  cfg.n_contraries = 1 + static_cast<int>(pick.below(shape.max_contraries));
  cfg.max_vars_per_rule = 1 + static_cast<int>(pick.below(3));
  cfg.n_kb_atoms = 2 + static_cast<int>(pick.below(shape.max_kb - 1));
  cfg.const_lo = 1;
  cfg.const_hi = 1 + static_cast<int>(pick.below(shape.max_constant));
  cfg.arity_dist = Dist{0, {0.15, 0.5, 0.35}};
  cfg.body_len_dist = Dist{1, {0.7, 0.3}};
  cfg.contrary_size_dist = Dist{1, {0.7, 0.3}};

  Theory t = generate(cfg);
  if (!validate(t).empty()) return std::nullopt;
  if (has_cyclic_rule_dependencies(t)) return std::nullopt;
  try {
    const GroundTheory g = naive_ground_theory(t, 4000);
    const AttackGraph af = induced_af(g, shape.max_arguments);
    if (af.size() > shape.max_arguments) return std::nullopt;
  } catch (const budget_exceeded&) {
    return std::nullopt;
  }
  return t;
}

}  // namespace aspic::test
