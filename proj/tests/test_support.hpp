#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aspic/aspic.hpp"

namespace aspic::test {

// Two-constant working theory used across the suites: one strict chain
// through f/b, a defeasible rule from a to c named n_d, and contraries
// wiring up undermining (a/b), undercutting (n_d/e) and rebutting (c/d).
inline const char* basic_theory_text() {
  return R"(
    contrary a(X): b(X).
    contrary n_d(X): e(X).
    contrary c(X): d(X).
    b(X) <- f(X,Y).
    e(X) <- c(X).
    n_d(X): c(X) <= a(X).
    assume a(1).
    assume a(2).
    fact f(1,2).
  )";
}

inline Theory basic_theory() { return parse_theory(basic_theory_text()); }

// Propositional undermining chain: fact a refutes assumption b, which
// refutes assumption c.
inline const char* chain_theory_text() {
  return R"(
    fact a.
    assume b.
    assume c.
    contrary b: a.
    contrary c: b.
  )";
}

inline Theory chain_theory() { return parse_theory(chain_theory_text()); }

inline Atom atom(const std::string& text) {
  Theory t = parse_theory("fact " + text + ".");
  return *t.facts.begin();
}

inline Atom patom(const std::string& text) {
  // Possibly non-ground atom, smuggled in through a rule head.
  Theory t = parse_theory("q0 <- q0. " + text + " <- q0.");
  for (const auto& r : t.strict) {
    if (r.head.predicate != "q0") return r.head;
  }
  return Atom{"q0", {}};
}

/// Directly built atom; usable for reserved (generated) predicates.
inline Atom mk(const std::string& pred,
               std::initializer_list<std::string> args = {}) {
  Atom a;
  a.predicate = pred;
  for (const auto& s : args) a.args.push_back(term_from_token(s));
  return a;
}

// Canonical structural encodings, comparable across groundings of the same
// theory.
inline std::set<std::string> encode_arguments(const AttackGraph& g) {
  std::set<std::string> out;
  for (const auto& a : g.arguments.arguments) out.insert(a.text);
  return out;
}

inline std::set<std::string> encode_attacks(const AttackGraph& g) {
  std::set<std::string> out;
  for (const auto& at : g.attacks) {
    out.insert(g.arguments.arguments[at.attacker].text + " |> " +
               g.arguments.arguments[at.target].text + " [" +
               to_text(at.kind) + " on " + to_text(at.element) + "]");
  }
  return out;
}

inline std::set<std::pair<std::string, std::string>> encode_attack_pairs(
    const AttackGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [from, to] : g.attack_pairs()) {
    out.emplace(g.arguments.arguments[from].text,
                g.arguments.arguments[to].text);
  }
  return out;
}

inline std::set<std::set<std::string>> encode_extension_family(
    const AttackGraph& g, const ExtensionSet& es) {
  std::set<std::set<std::string>> out;
  for (const auto& ext : es.extensions) {
    std::set<std::string> one;
    for (int id : ext) one.insert(g.arguments.arguments[id].text);
    out.insert(std::move(one));
  }
  return out;
}

inline std::set<AtomSet> encode_claim_family(const ExtensionSet& es) {
  const auto sets = claim_sets(es);
  return {sets.begin(), sets.end()};
}

}  // namespace aspic::test
