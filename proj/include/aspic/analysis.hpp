#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aspic/scc.hpp"
#include "aspic/theory.hpp"

namespace aspic {

/// Predicate-level dependency graph. An edge (p', p) means p depends on p':
/// positively when p' occurs in the body of a rule with head predicate p,
/// negatively when p' occurs among the contraries of a defeasible element
/// (rule name or head) of such a rule, or among the contraries of an
/// assumption with predicate p.
struct PredDepGraph {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> pos_edges;
  std::set<std::pair<std::string, std::string>> neg_edges;
};

namespace detail {

/// Predicates of the contrary atoms attached (by subject predicate) to the
/// given atom. Dependency analysis is predicate-level, so only the subject's
/// predicate is matched here.
inline std::set<std::string> contrary_predicates_of(
    const Atom& element, const std::set<ContraryExpr>& contraries) {
  std::set<std::string> out;
  for (const auto& c : contraries) {
    if (c.subject.predicate != element.predicate ||
        c.subject.arity() != element.arity()) {
      continue;
    }
    for (const auto& a : c.contraries) out.insert(a.predicate);
  }
  return out;
}

inline void collect_predicates(const Theory& t, std::set<std::string>& out) {
  for (const auto& c : t.contraries) {
    out.insert(c.subject.predicate);
    for (const auto& a : c.contraries) out.insert(a.predicate);
  }
  for (const auto& r : t.strict) {
    out.insert(r.head.predicate);
    for (const auto& a : r.body) out.insert(a.predicate);
  }
  for (const auto& r : t.defeasible) {
    out.insert(r.name.predicate);
    out.insert(r.head.predicate);
    for (const auto& a : r.body) out.insert(a.predicate);
  }
  for (const auto& a : t.facts) out.insert(a.predicate);
  for (const auto& a : t.assumptions) out.insert(a.predicate);
}

}  // namespace detail

inline PredDepGraph pred_dependencies(const Theory& t) {
  PredDepGraph g;
  detail::collect_predicates(t, g.nodes);

  auto add_rule_edges = [&](const Atom& head, const AtomSet& body) {
    for (const auto& a : body) {
      g.pos_edges.emplace(a.predicate, head.predicate);
    }
  };
  for (const auto& r : t.strict) add_rule_edges(r.head, r.body);
  for (const auto& r : t.defeasible) {
    add_rule_edges(r.head, r.body);
    // Defeasible elements of the rule are its name and head atoms.
    for (const Atom* element : {&r.name, &r.head}) {
      for (const auto& p :
           detail::contrary_predicates_of(*element, t.contraries)) {
        g.neg_edges.emplace(p, r.head.predicate);
      }
    }
  }
  for (const auto& a : t.assumptions) {
    for (const auto& p : detail::contrary_predicates_of(a, t.contraries)) {
      g.neg_edges.emplace(p, a.predicate);
    }
  }
  return g;
}

/// Predicates whose derivability within some extension cannot be settled at
/// grounding time: the least set closed under depending (with either
/// polarity) on an approximated predicate or sitting on a dependency cycle
/// with a negative step.
inline std::set<std::string> approximated_predicates(const Theory& t) {
  const PredDepGraph g = pred_dependencies(t);

  std::vector<std::string> preds(g.nodes.begin(), g.nodes.end());
  std::map<std::string, int> id;
  for (int i = 0; i < static_cast<int>(preds.size()); ++i) id[preds[i]] = i;

  std::vector<std::vector<int>> adj(preds.size());
  std::set<std::pair<int, int>> edges, negative;
  for (const auto& [from, to] : g.pos_edges) {
    edges.emplace(id[from], id[to]);
  }
  for (const auto& [from, to] : g.neg_edges) {
    edges.emplace(id[from], id[to]);
    negative.emplace(id[from], id[to]);
  }
  for (const auto& [from, to] : edges) adj[from].push_back(to);

  const auto sccs = detail::strongly_connected_components(adj);
  std::vector<int> comp_of(preds.size(), -1);
  for (int c = 0; c < static_cast<int>(sccs.size()); ++c) {
    for (int v : sccs[c]) comp_of[v] = c;
  }

  // Seed: components containing an internal negative edge (a self loop is a
  // cycle of length one).
  std::vector<bool> approx(sccs.size(), false);
  for (const auto& [from, to] : negative) {
    if (comp_of[from] == comp_of[to]) approx[comp_of[from]] = true;
  }
  // Closure: contamination flows along dependency direction. Components are
  // in reverse topological order, so walk backwards.
  for (int c = static_cast<int>(sccs.size()) - 1; c >= 0; --c) {
    if (!approx[c]) continue;
    for (int v : sccs[c]) {
      for (int w : adj[v]) approx[comp_of[w]] = true;
    }
  }

  std::set<std::string> out;
  for (std::size_t v = 0; v < preds.size(); ++v) {
    if (approx[comp_of[v]]) out.insert(preds[v]);
  }
  return out;
}

/// Rules partitioned into strongly connected components of the positive
/// rule dependency graph, in a topological order of the condensation.
struct SccOrder {
  std::vector<std::vector<TheoryRule>> components;
};

/// Rule r depends positively on r' when the predicate in the head of r'
/// occurs in the body of r. Ties between unordered components are broken by
/// the smallest canonical rule text.
inline SccOrder rule_scc_order(const Theory& t) {
  const std::vector<TheoryRule> rules = rules_in_canonical_order(t);
  const int n = static_cast<int>(rules.size());

  std::map<std::string, std::vector<int>> by_head_pred;
  for (int i = 0; i < n; ++i) {
    by_head_pred[head_of(rules[i]).predicate].push_back(i);
  }
  std::vector<std::vector<int>> adj(n);  // edge r' -> r : r depends on r'
  std::set<std::pair<int, int>> edges;
  for (int r = 0; r < n; ++r) {
    for (const auto& a : body_of(rules[r])) {
      auto it = by_head_pred.find(a.predicate);
      if (it == by_head_pred.end()) continue;
      for (int rp : it->second) edges.emplace(rp, r);
    }
  }
  for (const auto& [from, to] : edges) adj[from].push_back(to);

  const auto sccs = detail::strongly_connected_components(adj);
  const int m = static_cast<int>(sccs.size());
  std::vector<int> comp_of(n, -1);
  for (int c = 0; c < m; ++c) {
    for (int v : sccs[c]) comp_of[v] = c;
  }

  // Kahn's algorithm over the condensation with a smallest-rule-text queue.
  std::vector<std::set<int>> cadj(m);
  std::vector<int> indegree(m, 0);
  for (const auto& [from, to] : edges) {
    if (comp_of[from] != comp_of[to] &&
        cadj[comp_of[from]].insert(comp_of[to]).second) {
      ++indegree[comp_of[to]];
    }
  }
  std::vector<std::string> comp_key(m);
  for (int c = 0; c < m; ++c) {
    std::string best;
    for (int v : sccs[c]) {
      std::string s = to_text(rules[v]);
      if (best.empty() || s < best) best = std::move(s);
    }
    comp_key[c] = std::move(best);
  }
  auto later = [&](int a, int b) { return comp_key[a] > comp_key[b]; };
  std::priority_queue<int, std::vector<int>, decltype(later)> ready(later);
  for (int c = 0; c < m; ++c) {
    if (indegree[c] == 0) ready.push(c);
  }

  SccOrder order;
  while (!ready.empty()) {
    const int c = ready.top();
    ready.pop();
    std::vector<TheoryRule> comp;
    for (int v : sccs[c]) comp.push_back(rules[v]);
    std::sort(comp.begin(), comp.end());
    order.components.push_back(std::move(comp));
    for (int d : cadj[c]) {
      if (--indegree[d] == 0) ready.push(d);
    }
  }
  return order;
}

/// True when no rule transitively feeds its own body (all components are
/// singletons without self loops).
inline bool has_cyclic_rule_dependencies(const Theory& t) {
  const auto order = rule_scc_order(t);
  for (const auto& comp : order.components) {
    if (comp.size() > 1) return true;
    const auto& r = comp.front();
    for (const auto& a : body_of(r)) {
      if (a.predicate == head_of(r).predicate) return true;
    }
  }
  return false;
}

/// Dependency graph in DOT format; positive edges solid, negative dashed.
inline std::string to_dot(const PredDepGraph& g) {
  std::string s = "digraph dependencies {\n";
  for (const auto& n : g.nodes) {
    s += "  \"" + n + "\";\n";
  }
  for (const auto& [from, to] : g.pos_edges) {
    s += "  \"" + from + "\" -> \"" + to + "\";\n";
  }
  for (const auto& [from, to] : g.neg_edges) {
    s += "  \"" + from + "\" -> \"" + to + "\" [style=dashed];\n";
  }
  s += "}\n";
  return s;
}

}  // namespace aspic
