#pragma once

#include <string>

#include <json.hpp>

#include "aspic/argument.hpp"
#include "aspic/semantics.hpp"
#include "aspic/theory.hpp"

namespace aspic {

inline nlohmann::json to_json(const GroundTheory& t) {
  nlohmann::json j;
  j["facts"] = nlohmann::json::array();
  for (const auto& a : t.facts) j["facts"].push_back(to_text(a));
  j["assumptions"] = nlohmann::json::array();
  for (const auto& a : t.assumptions) j["assumptions"].push_back(to_text(a));
  j["strict"] = nlohmann::json::array();
  for (const auto& r : t.strict) {
    nlohmann::json rule;
    rule["head"] = to_text(r.head);
    rule["body"] = nlohmann::json::array();
    for (const auto& a : r.body) rule["body"].push_back(to_text(a));
    j["strict"].push_back(std::move(rule));
  }
  j["defeasible"] = nlohmann::json::array();
  for (const auto& r : t.defeasible) {
    nlohmann::json rule;
    rule["name"] = to_text(r.name);
    rule["head"] = to_text(r.head);
    rule["body"] = nlohmann::json::array();
    for (const auto& a : r.body) rule["body"].push_back(to_text(a));
    j["defeasible"].push_back(std::move(rule));
  }
  j["contraries"] = nlohmann::json::array();
  for (const auto& c : t.contraries) {
    nlohmann::json expr;
    expr["subject"] = to_text(c.subject);
    expr["contraries"] = nlohmann::json::array();
    for (const auto& a : c.contraries) expr["contraries"].push_back(to_text(a));
    j["contraries"].push_back(std::move(expr));
  }
  return j;
}

/// Claim sets alone, sorted and deduplicated:
/// [["a(2)","b(1)"], ...]
inline nlohmann::json claims_json(const AttackGraph& g, const ExtensionSet& es) {
  (void)g;
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& cs : claim_sets(es)) {
    nlohmann::json one = nlohmann::json::array();
    for (const auto& a : cs) one.push_back(to_text(a));
    claims.push_back(std::move(one));
  }
  return claims;
}

/// Full solve result: semantics tag, extension id lists (1-based, matching
/// the Ai names of the ICCMA dump), claim sets, and the argument table.
inline nlohmann::json to_json(const AttackGraph& g, const ExtensionSet& es) {
  nlohmann::json j;
  j["semantics"] = to_text(es.semantics);
  j["extensions"] = nlohmann::json::array();
  for (const auto& ext : es.extensions) {
    nlohmann::json ids = nlohmann::json::array();
    for (int id : ext) ids.push_back(id + 1);
    j["extensions"].push_back(std::move(ids));
  }
  j["claims"] = claims_json(g, es);
  j["arguments"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.arguments.arguments.size(); ++i) {
    const Argument& a = g.arguments.arguments[i];
    nlohmann::json arg;
    arg["id"] = i + 1;
    arg["conclusion"] = to_text(a.conclusion);
    arg["premises"] = nlohmann::json::array();
    for (const auto& p : a.premises) arg["premises"].push_back(to_text(p));
    arg["rules"] = nlohmann::json::array();
    for (int ri : a.rules_used) {
      const GroundRule& r = g.arguments.rules[ri];
      if (r.defeasible) {
        arg["rules"].push_back(
            to_text(DefeasibleRule{r.name, r.body, r.head}));
      } else {
        arg["rules"].push_back(to_text(StrictRule{r.body, r.head}));
      }
    }
    j["arguments"].push_back(std::move(arg));
  }
  return j;
}

}  // namespace aspic
