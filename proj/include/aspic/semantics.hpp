#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aspic/argument.hpp"
#include "aspic/errors.hpp"

namespace aspic {

inline constexpr std::size_t kDefaultExtensionBudget = 24;

enum class Semantics { admissible, complete, grounded, preferred, stable };

inline const char* to_text(Semantics s) {
  switch (s) {
    case Semantics::admissible: return "adm";
    case Semantics::complete: return "com";
    case Semantics::grounded: return "grd";
    case Semantics::preferred: return "prf";
    case Semantics::stable: return "stb";
  }
  return "?";
}

inline Semantics semantics_from_text(const std::string& s) {
  if (s == "adm") return Semantics::admissible;
  if (s == "com") return Semantics::complete;
  if (s == "grd") return Semantics::grounded;
  if (s == "prf") return Semantics::preferred;
  if (s == "stb") return Semantics::stable;
  throw std::invalid_argument("unknown semantics '" + s + "'");
}

struct ExtensionSet {
  Semantics semantics = Semantics::complete;
  std::vector<std::vector<int>> extensions;  // sorted ids, family sorted
  std::vector<AtomSet> claim_sets;           // conclusions, per extension
};

namespace detail {

struct AfView {
  int n = 0;
  std::vector<std::vector<int>> attackers;  // per argument
  std::vector<std::vector<int>> attacked;   // per argument
};

inline AfView af_view(const AttackGraph& g) {
  AfView v;
  v.n = static_cast<int>(g.size());
  v.attackers.resize(v.n);
  v.attacked.resize(v.n);
  for (const auto& [from, to] : g.attack_pairs()) {
    v.attackers[to].push_back(from);
    v.attacked[from].push_back(to);
  }
  return v;
}

/// Arguments acceptable w.r.t. S: every attacker is attacked by S.
inline std::set<int> defended_by(const AfView& v, const std::set<int>& s) {
  std::vector<bool> attacked_by_s(v.n, false);
  for (int i : s) {
    for (int t : v.attacked[i]) attacked_by_s[t] = true;
  }
  std::set<int> out;
  for (int i = 0; i < v.n; ++i) {
    bool ok = true;
    for (int a : v.attackers[i]) {
      if (!attacked_by_s[a]) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(i);
  }
  return out;
}

inline bool conflict_free(const AfView& v, const std::set<int>& s) {
  for (int i : s) {
    for (int t : v.attacked[i]) {
      if (s.count(t)) return false;
    }
  }
  return true;
}

/// Least fixpoint of the defense operator from the empty set. Works for any
/// framework size.
inline std::set<int> grounded_fixpoint(const AfView& v) {
  std::set<int> s;
  while (true) {
    std::set<int> next = defended_by(v, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

struct MaskView {
  int n = 0;
  std::vector<std::uint64_t> attackers;
  std::vector<std::uint64_t> attacked;
  std::uint64_t all = 0;

  std::uint64_t attacked_by(std::uint64_t s) const {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) out |= attacked[i];
    }
    return out;
  }
  std::uint64_t defended(std::uint64_t s) const {
    const std::uint64_t hit = attacked_by(s);
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) {
      if ((attackers[i] & ~hit) == 0) out |= std::uint64_t{1} << i;
    }
    return out;
  }
};

inline MaskView mask_view(const AttackGraph& g) {
  MaskView v;
  v.n = static_cast<int>(g.size());
  v.attackers.assign(v.n, 0);
  v.attacked.assign(v.n, 0);
  v.all = v.n == 64 ? ~std::uint64_t{0}
                    : (std::uint64_t{1} << v.n) - 1;
  for (const auto& [from, to] : g.attack_pairs()) {
    v.attackers[to] |= std::uint64_t{1} << from;
    v.attacked[from] |= std::uint64_t{1} << to;
  }
  return v;
}

inline std::vector<int> mask_to_ids(std::uint64_t mask, int n) {
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1) ids.push_back(i);
  }
  return ids;
}

inline void require_enumerable(const AttackGraph& g, std::size_t budget) {
  const std::size_t cap = std::min<std::size_t>(budget, 63);
  if (g.size() > cap) throw budget_exceeded("extension enumeration", cap);
}

/// All complete extensions as masks, ascending.
inline std::vector<std::uint64_t> complete_masks(const MaskView& v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0;; ++s) {
    if ((s & v.attacked_by(s)) == 0 && v.defended(s) == s) out.push_back(s);
    if (s == v.all) break;
  }
  return out;
}

}  // namespace detail

/// Evaluates whether S satisfies the semantics on the framework, straight
/// from the definitions. Preferred needs the complete family and is subject
/// to the enumeration budget.
inline bool check(const AttackGraph& g, const std::set<int>& s, Semantics sem,
                  std::size_t budget = kDefaultExtensionBudget) {
  const auto v = detail::af_view(g);
  const bool cf = detail::conflict_free(v, s);
  switch (sem) {
    case Semantics::admissible: {
      if (!cf) return false;
      const auto d = detail::defended_by(v, s);
      return std::includes(d.begin(), d.end(), s.begin(), s.end());
    }
    case Semantics::complete:
      return cf && detail::defended_by(v, s) == s;
    case Semantics::stable: {
      if (!cf) return false;
      std::set<int> covered = s;
      for (int i : s) {
        for (int t : v.attacked[i]) covered.insert(t);
      }
      return static_cast<int>(covered.size()) == v.n;
    }
    case Semantics::grounded:
      return s == detail::grounded_fixpoint(v);
    case Semantics::preferred: {
      if (!cf || detail::defended_by(v, s) != s) return false;
      detail::require_enumerable(g, budget);
      const auto mv = detail::mask_view(g);
      std::uint64_t mask = 0;
      for (int i : s) mask |= std::uint64_t{1} << i;
      for (std::uint64_t c : detail::complete_masks(mv)) {
        if (c != mask && (mask & ~c) == 0) return false;
      }
      return true;
    }
  }
  return false;
}

/// Enumerates the extension family: admissible/complete/stable by filtered
/// subset enumeration, grounded by the defense fixpoint (available at any
/// size), preferred as the maximal complete extensions.
inline ExtensionSet extensions(const AttackGraph& g, Semantics sem,
                               std::size_t budget = kDefaultExtensionBudget) {
  ExtensionSet out;
  out.semantics = sem;
  std::vector<std::vector<int>> found;

  if (sem == Semantics::grounded) {
    const auto v = detail::af_view(g);
    const auto s = detail::grounded_fixpoint(v);
    found.emplace_back(s.begin(), s.end());
  } else {
    detail::require_enumerable(g, budget);
    const auto v = detail::mask_view(g);
    if (sem == Semantics::preferred) {
      const auto complete = detail::complete_masks(v);
      for (std::uint64_t c : complete) {
        bool maximal = true;
        for (std::uint64_t d : complete) {
          if (d != c && (c & ~d) == 0) {
            maximal = false;
            break;
          }
        }
        if (maximal) found.push_back(detail::mask_to_ids(c, v.n));
      }
    } else {
      for (std::uint64_t s = 0;; ++s) {
        const std::uint64_t hit = v.attacked_by(s);
        const bool cf = (s & hit) == 0;
        bool keep = false;
        switch (sem) {
          case Semantics::admissible:
            keep = cf && (s & ~v.defended(s)) == 0;
            break;
          case Semantics::complete:
            keep = cf && v.defended(s) == s;
            break;
          case Semantics::stable:
            keep = cf && (s | hit) == v.all;
            break;
          default:
            break;
        }
        if (keep) found.push_back(detail::mask_to_ids(s, v.n));
        if (s == v.all) break;
      }
    }
  }

  std::sort(found.begin(), found.end());
  out.extensions = std::move(found);
  for (const auto& ext : out.extensions) {
    AtomSet claims;
    for (int id : ext) claims.insert(g.arguments.arguments[id].conclusion);
    out.claim_sets.push_back(std::move(claims));
  }
  return out;
}

/// Certain arguments sit in every complete extension; tentative arguments
/// are those not attacked by any certain argument.
inline std::pair<std::set<int>, std::set<int>> certain_and_tentative(
    const AttackGraph& g, std::size_t budget = kDefaultExtensionBudget) {
  const auto complete = extensions(g, Semantics::complete, budget);
  std::set<int> certain;
  if (!complete.extensions.empty()) {
    certain.insert(complete.extensions.front().begin(),
                   complete.extensions.front().end());
    for (const auto& ext : complete.extensions) {
      std::set<int> keep;
      std::set_intersection(certain.begin(), certain.end(), ext.begin(),
                            ext.end(), std::inserter(keep, keep.begin()));
      certain = std::move(keep);
    }
  }
  std::set<int> tentative;
  const auto v = detail::af_view(g);
  for (int i = 0; i < v.n; ++i) {
    bool attacked_by_certain = false;
    for (int a : v.attackers[i]) {
      if (certain.count(a)) {
        attacked_by_certain = true;
        break;
      }
    }
    if (!attacked_by_certain) tentative.insert(i);
  }
  return {std::move(certain), std::move(tentative)};
}

/// Claim sets of the family, with equal sets collapsed.
inline std::vector<AtomSet> claim_sets(const ExtensionSet& es) {
  std::vector<AtomSet> out = es.claim_sets;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace aspic
