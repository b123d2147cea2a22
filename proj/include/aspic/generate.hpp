#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aspic/theory.hpp"

namespace aspic {

/// splitmix64: state advances by the golden-ratio increment and the output
/// is the finalizer z ^= z >> 31 of (z * 0xbf58476d1ce4e5b9, z * 0x94d049bb
/// 133111eb) applied to the state. Fully specified here so a fixed seed
/// reproduces the same stream on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). The modulo bias is below n / 2^64.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

/// A discrete distribution over consecutive integers starting at `lo`.
struct Dist {
  int lo = 1;
  std::vector<double> probs;

  bool valid() const {
    if (probs.empty()) return false;
    double sum = 0;
    for (double p : probs) {
      if (p < 0) return false;
      sum += p;
    }
    return sum > 0.999 && sum < 1.001;
  }

  int sample(SplitMix64& rng) const {
    double u = rng.unit();
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (u < probs[i]) return lo + static_cast<int>(i);
      u -= probs[i];
    }
    return lo + static_cast<int>(probs.size()) - 1;
  }
};

/// Arity 1..5 with 80% of the mass on 1..3.
inline Dist default_arity_dist() {
  return {1, {0.8 / 3, 0.8 / 3, 0.8 / 3, 0.1, 0.1}};
}

/// Rule body length 1..10 with 80% of the mass on 1..4.
inline Dist default_body_len_dist() {
  Dist d{1, std::vector<double>(10, 0.2 / 6)};
  for (int i = 0; i < 4; ++i) d.probs[i] = 0.2;
  return d;
}

/// Contrary set size uniform on 1..3.
inline Dist default_contrary_size_dist() {
  return {1, {1.0 / 3, 1.0 / 3, 1.0 / 3}};
}

/// Random-instance shape. The defaults follow the desk-scale profile:
/// 10 rules plus 7 contrary relations over a pool of predicates, integer
/// constants in [0, 30] and a 50-atom knowledge base.
struct GenConfig {
  std::uint64_t seed = 1;
  int n_strict = 5;
  int n_defeasible = 5;
  int n_contraries = 7;
  int max_vars_per_rule = 3;
  int n_kb_atoms = 50;
  int const_lo = 0;
  int const_hi = 30;
  Dist arity_dist = default_arity_dist();
  Dist body_len_dist = default_body_len_dist();
  Dist contrary_size_dist = default_contrary_size_dist();

  void check() const {
    if (n_strict < 0 || n_defeasible < 0 || n_contraries < 0 ||
        n_kb_atoms < 0 || max_vars_per_rule < 0) {
      throw std::invalid_argument("generator counts must be non-negative");
    }
    if (const_lo > const_hi || const_lo < 0) {
      throw std::invalid_argument("bad constant range");
    }
    if (!arity_dist.valid() || !body_len_dist.valid() ||
        !contrary_size_dist.valid()) {
      throw std::invalid_argument("distribution weights must sum to 1");
    }
  }
};

namespace detail {

struct GenState {
  SplitMix64 rng;
  std::vector<std::string> pool;       // ordinary predicates p1, p2, ...
  std::vector<std::size_t> pool_arity;
  std::vector<std::string> consts;
  int next_name = 1;                   // rule name counter n1, n2, ...
};

inline Term random_constant(GenState& g) {
  return constant(g.consts[g.rng.below(g.consts.size())]);
}

/// Atom over the predicate pool; argument positions are variables from the
/// rule's variable scope with probability 0.8, constants otherwise.
inline Atom random_pool_atom(GenState& g, const std::vector<std::string>& scope) {
  const auto p = g.rng.below(g.pool.size());
  Atom a;
  a.predicate = g.pool[p];
  for (std::size_t i = 0; i < g.pool_arity[p]; ++i) {
    if (!scope.empty() && g.rng.chance(0.8)) {
      a.args.push_back(variable(scope[g.rng.below(scope.size())]));
    } else {
      a.args.push_back(random_constant(g));
    }
  }
  return a;
}

/// Safety by construction: arguments come from the variables that actually
/// occur in the body (or constants when there are none).
inline Atom head_atom(GenState& g, const std::string& pred, std::size_t arity,
                      const std::vector<std::string>& body_vars) {
  Atom a;
  a.predicate = pred;
  for (std::size_t i = 0; i < arity; ++i) {
    if (!body_vars.empty() && g.rng.chance(0.85)) {
      a.args.push_back(variable(body_vars[g.rng.below(body_vars.size())]));
    } else {
      a.args.push_back(random_constant(g));
    }
  }
  return a;
}

inline AtomSet random_body(GenState& g, const GenConfig& cfg) {
  const int len = cfg.body_len_dist.sample(g.rng);
  const int n_vars = cfg.max_vars_per_rule > 0
                         ? g.rng.range(1, cfg.max_vars_per_rule)
                         : 0;
  std::vector<std::string> scope;
  for (int v = 0; v < n_vars; ++v) scope.push_back("X" + std::to_string(v + 1));
  AtomSet body;
  for (int guard = 0; static_cast<int>(body.size()) < len; ++guard) {
    if (guard > 200 * len) {
      throw std::invalid_argument(
          "generator cannot draw enough distinct body atoms; "
          "enlarge the predicate pool or constant range");
    }
    body.insert(random_pool_atom(g, scope));
  }
  return body;
}

}  // namespace detail

/// Draws a random theory. Deterministic for a fixed config; the result
/// always passes validate().
///
/// Scheme for the parts the shape parameters leave open: the predicate pool
/// has max(3, n_strict + n_defeasible) predicates with arities drawn from
/// arity_dist; rule name predicates are fresh per defeasible rule; contrary
/// subjects are drawn uniformly from pool plus name predicates, while
/// contrary atoms draw from the pool (their variables from the subject's);
/// knowledge-base atoms are assigned to facts or assumptions by a fair coin.
inline Theory generate(const GenConfig& cfg) {
  cfg.check();
  detail::GenState g{SplitMix64(cfg.seed), {}, {}, {}, 1};
  const int pool_size = std::max(3, cfg.n_strict + cfg.n_defeasible);
  for (int i = 0; i < pool_size; ++i) {
    g.pool.push_back("p" + std::to_string(i + 1));
    g.pool_arity.push_back(
        static_cast<std::size_t>(cfg.arity_dist.sample(g.rng)));
  }
  for (int c = cfg.const_lo; c <= cfg.const_hi; ++c) {
    g.consts.push_back(std::to_string(c));
  }

  Theory t;

  auto distinct_insert = [&](auto& set, auto make, int target, const char* what) {
    for (int guard = 0; static_cast<int>(set.size()) < target; ++guard) {
      if (guard > 200 * target + 200) {
        throw std::invalid_argument(std::string("generator cannot draw ") +
                                    std::to_string(target) + " distinct " +
                                    what);
      }
      set.insert(make());
    }
  };

  distinct_insert(
      t.strict,
      [&] {
        StrictRule r;
        r.body = detail::random_body(g, cfg);
        const auto body_vars_set = variables_of(r.body);
        std::vector<std::string> body_vars(body_vars_set.begin(),
                                           body_vars_set.end());
        const auto p = g.rng.below(g.pool.size());
        r.head = detail::head_atom(g, g.pool[p], g.pool_arity[p], body_vars);
        return r;
      },
      cfg.n_strict, "strict rules");

  std::map<std::string, std::size_t> name_arity;
  distinct_insert(
      t.defeasible,
      [&] {
        DefeasibleRule r;
        r.body = detail::random_body(g, cfg);
        const auto body_vars_set = variables_of(r.body);
        std::vector<std::string> body_vars(body_vars_set.begin(),
                                           body_vars_set.end());
        const auto p = g.rng.below(g.pool.size());
        r.head = detail::head_atom(g, g.pool[p], g.pool_arity[p], body_vars);
        const std::string name_pred = "n" + std::to_string(g.next_name++);
        const auto arity =
            static_cast<std::size_t>(cfg.arity_dist.sample(g.rng));
        name_arity[name_pred] = arity;
        r.name = detail::head_atom(g, name_pred, arity, body_vars);
        return r;
      },
      cfg.n_defeasible, "defeasible rules");

  // Candidate contrary subjects: ordinary predicates and rule names.
  std::vector<std::pair<std::string, std::size_t>> subjects;
  for (std::size_t i = 0; i < g.pool.size(); ++i) {
    subjects.emplace_back(g.pool[i], g.pool_arity[i]);
  }
  for (const auto& [pred, arity] : name_arity) {
    subjects.emplace_back(pred, arity);
  }

  distinct_insert(
      t.contraries,
      [&] {
        for (int tries = 0;; ++tries) {
          if (tries > 1000) {
            throw std::invalid_argument(
                "generator cannot build a contrary expression; no usable "
                "subject/contrary predicate combination");
          }
          const auto& [pred, arity] = subjects[g.rng.below(subjects.size())];
          ContraryExpr c;
          c.subject.predicate = pred;
          std::vector<std::string> scope;
          for (std::size_t i = 0; i < arity; ++i) {
            scope.push_back("X" + std::to_string(i + 1));
            c.subject.args.push_back(variable(scope.back()));
          }
          // 0-ary subjects can only be countered by 0-ary predicates.
          std::vector<std::size_t> candidates;
          for (std::size_t i = 0; i < g.pool.size(); ++i) {
            if (!scope.empty() || g.pool_arity[i] == 0) candidates.push_back(i);
          }
          if (candidates.empty()) continue;
          const int size = cfg.contrary_size_dist.sample(g.rng);
          for (int guard = 0; static_cast<int>(c.contraries.size()) < size &&
                              guard < 200 * size;
               ++guard) {
            const auto p = candidates[g.rng.below(candidates.size())];
            Atom a;
            a.predicate = g.pool[p];
            for (std::size_t i = 0; i < g.pool_arity[p]; ++i) {
              a.args.push_back(variable(scope[g.rng.below(scope.size())]));
            }
            c.contraries.insert(std::move(a));
          }
          if (c.contraries.empty()) continue;
          return c;
        }
      },
      cfg.n_contraries, "contrary expressions");

  AtomSet kb;
  distinct_insert(
      kb,
      [&] {
        const auto p = g.rng.below(g.pool.size());
        Atom a;
        a.predicate = g.pool[p];
        for (std::size_t i = 0; i < g.pool_arity[p]; ++i) {
          a.args.push_back(detail::random_constant(g));
        }
        return a;
      },
      cfg.n_kb_atoms, "knowledge-base atoms");
  for (const auto& a : kb) {
    (g.rng.chance(0.5) ? t.facts : t.assumptions).insert(a);
  }

  return t;
}

}  // namespace aspic
