#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aspic/atoms.hpp"
#include "aspic/errors.hpp"
#include "aspic/scc.hpp"

namespace aspic {

/// head :- positive_body, not negative_body.
/// Safe when vars(head) and vars(negative_body) occur in the positive body.
struct DatalogRule {
  Atom head;
  AtomSet positive_body;
  AtomSet negative_body;

  bool operator==(const DatalogRule&) const = default;
  bool operator<(const DatalogRule& o) const {
    if (head != o.head) return head < o.head;
    if (positive_body != o.positive_body)
      return positive_body < o.positive_body;
    return negative_body < o.negative_body;
  }
};

inline std::string to_text(const DatalogRule& r) {
  std::string s = to_text(r.head);
  if (r.positive_body.empty() && r.negative_body.empty()) return s;
  s += " :- ";
  const char* sep = "";
  for (const auto& a : r.positive_body) {
    s += sep;
    s += to_text(a);
    sep = ", ";
  }
  for (const auto& a : r.negative_body) {
    s += sep;
    s += "not ";
    s += to_text(a);
    sep = ", ";
  }
  return s;
}

struct Interpretation {
  AtomSet atoms;

  bool contains(const Atom& a) const { return atoms.count(a) != 0; }
  std::size_t size() const { return atoms.size(); }
  bool operator==(const Interpretation&) const = default;
};

/// Sorted model dump, one ground atom per line.
inline std::string to_text(const Interpretation& i) {
  std::string s;
  for (const auto& a : i.atoms) {
    s += to_text(a);
    s += '\n';
  }
  return s;
}

/// Assigns each predicate a stratum such that a rule's head is never below
/// its positive body and strictly above its negated body.
struct Stratification {
  std::map<std::string, int> level;

  int level_of(const std::string& pred) const {
    auto it = level.find(pred);
    return it != level.end() ? it->second : 0;
  }
  int max_level() const {
    int m = 0;
    for (const auto& [pred, l] : level) m = std::max(m, l);
    return m;
  }
};

/// An immutable rule set. Copies share the rules and the lazily computed
/// model, so a program value can be passed around and queried from several
/// threads.
class DatalogProgram {
 public:
  DatalogProgram() : state_(std::make_shared<State>()) {}
  explicit DatalogProgram(std::set<DatalogRule> rules)
      : state_(std::make_shared<State>(std::move(rules))) {}

  const std::set<DatalogRule>& rules() const { return state_->rules; }

  bool operator==(const DatalogProgram& o) const {
    return state_ == o.state_ || rules() == o.rules();
  }

 private:
  struct State {
    State() = default;
    explicit State(std::set<DatalogRule> r) : rules(std::move(r)) {}
    std::set<DatalogRule> rules;
    std::mutex mutex;
    bool evaluated = false;
    Interpretation model;
    std::exception_ptr error;
  };
  std::shared_ptr<State> state_;

  friend const Interpretation& evaluate(const DatalogProgram&);
};

inline std::string to_text(const DatalogProgram& p) {
  std::string s;
  for (const auto& r : p.rules()) {
    s += to_text(r);
    s += ".\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Stratification

namespace detail {

struct PredGraph {
  std::vector<std::string> preds;                  // sorted
  std::map<std::string, int> id;
  std::vector<std::vector<int>> adj;               // dependency direction
  std::set<std::pair<int, int>> negative;          // (from, to)
};

inline PredGraph predicate_graph(const DatalogProgram& p) {
  PredGraph g;
  std::set<std::string> preds;
  for (const auto& r : p.rules()) {
    preds.insert(r.head.predicate);
    for (const auto& a : r.positive_body) preds.insert(a.predicate);
    for (const auto& a : r.negative_body) preds.insert(a.predicate);
  }
  g.preds.assign(preds.begin(), preds.end());
  for (int i = 0; i < static_cast<int>(g.preds.size()); ++i) g.id[g.preds[i]] = i;
  g.adj.resize(g.preds.size());
  std::set<std::pair<int, int>> edges;
  for (const auto& r : p.rules()) {
    const int head = g.id[r.head.predicate];
    for (const auto& a : r.positive_body) {
      edges.emplace(g.id[a.predicate], head);
    }
    for (const auto& a : r.negative_body) {
      edges.emplace(g.id[a.predicate], head);
      g.negative.emplace(g.id[a.predicate], head);
    }
  }
  for (const auto& [from, to] : edges) g.adj[from].push_back(to);
  return g;
}

[[noreturn]] inline void report_negation_cycle(const PredGraph& g,
                                               const std::vector<int>& scc,
                                               int neg_from, int neg_to) {
  // Close the cycle: the negative edge neg_from -> neg_to plus a path from
  // neg_to back to neg_from inside the component.
  std::set<int> members(scc.begin(), scc.end());
  std::map<int, int> parent;
  std::deque<int> queue{neg_to};
  parent[neg_to] = neg_to;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == neg_from) break;
    for (int v : g.adj[u]) {
      if (members.count(v) && !parent.count(v)) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  std::vector<std::string> cycle;
  cycle.push_back(g.preds[neg_from]);
  std::vector<int> path;
  for (int v = neg_from; v != neg_to; v = parent.at(v)) path.push_back(v);
  path.push_back(neg_to);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    cycle.push_back(g.preds[*it]);
  }
  if (neg_from != neg_to) cycle.push_back(g.preds[neg_from]);
  throw not_stratifiable(std::move(cycle));
}

}  // namespace detail

/// Minimal deterministic stratification: a predicate's level is the longest
/// chain of negative edges below it in the dependency condensation. Throws
/// not_stratifiable when some predicate depends negatively on itself.
inline Stratification stratify(const DatalogProgram& p) {
  const auto g = detail::predicate_graph(p);
  const auto sccs = detail::strongly_connected_components(g.adj);

  std::vector<int> comp_of(g.preds.size(), -1);
  for (int c = 0; c < static_cast<int>(sccs.size()); ++c) {
    for (int v : sccs[c]) comp_of[v] = c;
  }
  for (const auto& [from, to] : g.negative) {
    if (comp_of[from] == comp_of[to]) {
      detail::report_negation_cycle(g, sccs[comp_of[from]], from, to);
    }
  }

  // Components arrive in reverse topological order; walk them backwards so
  // every dependency is levelled before its dependents.
  std::vector<int> comp_level(sccs.size(), 0);
  for (int c = static_cast<int>(sccs.size()) - 1; c >= 0; --c) {
    for (int v : sccs[c]) {
      for (int w : g.adj[v]) {
        // edge v -> w : w depends on v
        if (comp_of[w] == c) continue;
        const int bump = g.negative.count({v, w}) ? 1 : 0;
        comp_level[comp_of[w]] =
            std::max(comp_level[comp_of[w]], comp_level[c] + bump);
      }
    }
  }

  Stratification s;
  for (std::size_t v = 0; v < g.preds.size(); ++v) {
    s.level[g.preds[v]] = comp_level[comp_of[v]];
  }
  return s;
}

/// Checks the two defining inequalities of a stratification against a
/// program: level(head) >= level(positive body), level(head) > level(negated
/// body).
inline bool valid_stratification(const DatalogProgram& p,
                                 const Stratification& s) {
  for (const auto& r : p.rules()) {
    const int h = s.level_of(r.head.predicate);
    for (const auto& a : r.positive_body) {
      if (h < s.level_of(a.predicate)) return false;
    }
    for (const auto& a : r.negative_body) {
      if (h <= s.level_of(a.predicate)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Evaluation

/// One application of the immediate consequence operator to ground rules:
/// heads of rules whose positive body holds in `i` and whose negated atoms
/// are absent from `decided` (the fixed result of strictly lower strata).
inline Interpretation immediate_consequence(
    const std::set<DatalogRule>& ground_rules, const Interpretation& i,
    const Interpretation& decided = {}) {
  Interpretation out;
  for (const auto& r : ground_rules) {
    bool fires = true;
    for (const auto& a : r.positive_body) {
      if (!i.contains(a)) {
        fires = false;
        break;
      }
    }
    if (!fires) continue;
    for (const auto& a : r.negative_body) {
      if (decided.contains(a)) {
        fires = false;
        break;
      }
    }
    if (fires) out.atoms.insert(r.head);
  }
  return out;
}

namespace detail {

using AtomIndex = std::map<std::string, std::vector<Atom>>;

inline const std::vector<Atom>& atoms_for(const AtomIndex& idx,
                                          const std::string& pred) {
  static const std::vector<Atom> empty;
  auto it = idx.find(pred);
  return it != idx.end() ? it->second : empty;
}

inline int bound_count(const Atom& a, const Substitution& s) {
  int n = 0;
  for (const auto& t : a.args) {
    if (t.is_constant() || s.count(t.name)) ++n;
  }
  return n;
}

/// Substitution join over the positive body. `forced` (when >= 0) is the
/// body position matched against `delta` instead of the full index; it is
/// processed first, the rest most-bound-first.
template <typename Emit>
void join(const DatalogRule& rule, const std::vector<Atom>& body,
          const AtomIndex& total, const AtomIndex& delta, int forced,
          std::vector<bool>& done, std::size_t n_done, Substitution& subst,
          const AtomSet& model, const Emit& emit) {
  if (n_done == body.size()) {
    for (const auto& a : rule.negative_body) {
      Atom ground = substitute(a, subst);
      assert(ground.ground());
      if (model.count(ground)) return;
    }
    emit(substitute(rule.head, subst));
    return;
  }
  int pick = -1;
  if (forced >= 0 && !done[forced]) {
    pick = forced;
  } else {
    int best = -1;
    for (int i = 0; i < static_cast<int>(body.size()); ++i) {
      if (done[i]) continue;
      const int b = bound_count(body[i], subst);
      if (b > best) {
        best = b;
        pick = i;
      }
    }
  }
  done[pick] = true;
  const auto& candidates =
      (pick == forced) ? atoms_for(delta, body[pick].predicate)
                       : atoms_for(total, body[pick].predicate);
  for (const auto& cand : candidates) {
    Substitution saved = subst;
    if (match(body[pick], cand, subst)) {
      join(rule, body, total, delta, forced, done, n_done + 1, subst, model,
           emit);
    }
    subst = std::move(saved);
  }
  done[pick] = false;
}

template <typename Emit>
void fire_rule(const DatalogRule& rule, const AtomIndex& total,
               const AtomIndex& delta, int forced, const AtomSet& model,
               const Emit& emit) {
  std::vector<Atom> body(rule.positive_body.begin(), rule.positive_body.end());
  std::vector<bool> done(body.size(), false);
  Substitution subst;
  join(rule, body, total, delta, forced, done, 0, subst, model, emit);
}

}  // namespace detail

/// Least model under an explicitly supplied (valid) stratification.
/// Strata are saturated in increasing level order with semi-naive deltas.
inline Interpretation evaluate_with(const DatalogProgram& p,
                                    const Stratification& strat) {
  std::map<int, std::vector<const DatalogRule*>> strata;
  for (const auto& r : p.rules()) {
    strata[strat.level_of(r.head.predicate)].push_back(&r);
  }

  Interpretation model;
  detail::AtomIndex total;
  for (const auto& [level, rules] : strata) {
    detail::AtomIndex delta;
    AtomSet fresh;
    auto sink = [&](const Atom& head) {
      if (model.atoms.insert(head).second) fresh.insert(head);
    };
    for (const auto* r : rules) {
      detail::fire_rule(*r, total, delta, -1, model.atoms, sink);
    }
    while (!fresh.empty()) {
      delta.clear();
      for (const auto& a : fresh) {
        total[a.predicate].push_back(a);
        delta[a.predicate].push_back(a);
      }
      fresh.clear();
      for (const auto* r : rules) {
        int pos = 0;
        for (const auto& a : r->positive_body) {
          if (strat.level_of(a.predicate) == level) {
            detail::fire_rule(*r, total, delta, pos, model.atoms, sink);
          }
          ++pos;
        }
      }
    }
  }
  return model;
}

/// Least model of a stratifiable program. Memoized on the program value;
/// concurrent callers share one evaluation.
inline const Interpretation& evaluate(const DatalogProgram& p) {
  auto& st = *p.state_;
  std::scoped_lock lock(st.mutex);
  if (!st.evaluated) {
    st.evaluated = true;
    try {
      st.model = evaluate_with(p, stratify(p));
    } catch (...) {
      st.error = std::current_exception();
    }
  }
  if (st.error) std::rethrow_exception(st.error);
  return st.model;
}

/// Reference evaluator: per stratum, applies all rules against the full
/// interpretation until fixpoint. No deltas, no indexes, no atom ordering
/// heuristics; kept as the oracle for the semi-naive path.
inline Interpretation evaluate_naive(const DatalogProgram& p) {
  const auto strat = stratify(p);
  std::map<int, std::vector<const DatalogRule*>> strata;
  for (const auto& r : p.rules()) {
    strata[strat.level_of(r.head.predicate)].push_back(&r);
  }

  Interpretation model;
  for (const auto& [level, rules] : strata) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto* r : rules) {
        std::vector<Atom> body(r->positive_body.begin(),
                               r->positive_body.end());
        std::vector<Substitution> partial{Substitution{}};
        for (const auto& b : body) {
          std::vector<Substitution> next;
          for (const auto& s : partial) {
            for (const auto& cand : model.atoms) {
              Substitution trial = s;
              if (match(b, cand, trial)) next.push_back(std::move(trial));
            }
          }
          partial = std::move(next);
        }
        for (const auto& s : partial) {
          bool blocked = false;
          for (const auto& a : r->negative_body) {
            if (model.contains(substitute(a, s))) {
              blocked = true;
              break;
            }
          }
          if (!blocked && model.atoms.insert(substitute(r->head, s)).second) {
            changed = true;
          }
        }
      }
    }
  }
  return model;
}

/// All derivable atoms of one predicate. Unknown predicates yield the empty
/// set. The model is computed once per program and shared across queries.
inline AtomSet query(const DatalogProgram& p, std::string_view predicate) {
  AtomSet out;
  for (const auto& a : evaluate(p).atoms) {
    if (a.predicate == predicate) out.insert(a);
  }
  return out;
}

}  // namespace aspic
