#include <catch2/catch_amalgamated.hpp>

#include "aspic/datalog.hpp"
#include "test_random.hpp"
#include "test_support.hpp"

using namespace aspic;
using namespace aspic::test;

namespace {

DatalogRule dfact(const std::string& head) { return {atom(head), {}, {}}; }

// {-> a, b :- not a, c :- not b}
DatalogProgram negation_chain() {
  return DatalogProgram({
      dfact("a"),
      {atom("b"), {}, {atom("a")}},
      {atom("c"), {}, {atom("b")}},
  });
}

// Hand-written translation of the working theory: one auxiliary predicate
// per rule carrying the body variables.
DatalogProgram basic_translation() {
  return DatalogProgram({
      dfact("f(1,2)"),
      dfact("a(1)"),
      dfact("a(2)"),
      {mk("__r1", {"X", "Y"}), {patom("f(X,Y)")}, {}},
      {patom("b(X)"), {mk("__r1", {"X", "Y"})}, {}},
      {mk("__r2", {"X"}), {patom("c(X)")}, {}},
      {patom("e(X)"), {mk("__r2", {"X"})}, {}},
      {mk("__r3", {"X"}), {patom("a(X)")}, {}},
      {patom("c(X)"), {mk("__r3", {"X"})}, {}},
      {patom("n_d(X)"), {mk("__r3", {"X"})}, {}},
  });
}

// Same theory under the improved translation: the defeasible rule body asks
// for not d(X), assumptions ask for not b(i).
DatalogProgram basic_translation_improved() {
  return DatalogProgram({
      dfact("f(1,2)"),
      {atom("a(1)"), {}, {atom("b(1)")}},
      {atom("a(2)"), {}, {atom("b(2)")}},
      {mk("__r1", {"X", "Y"}), {patom("f(X,Y)")}, {}},
      {patom("b(X)"), {mk("__r1", {"X", "Y"})}, {}},
      {mk("__r2", {"X"}), {patom("c(X)")}, {}},
      {patom("e(X)"), {mk("__r2", {"X"})}, {}},
      {mk("__r3", {"X"}), {patom("a(X)")}, {patom("d(X)")}},
      {patom("c(X)"), {mk("__r3", {"X"})}, {}},
      {patom("n_d(X)"), {mk("__r3", {"X"})}, {}},
  });
}

}  // namespace

TEST_CASE("stratification uses minimal levels", "[datalog]") {
  const auto s = stratify(negation_chain());
  REQUIRE(s.level_of("a") == 0);
  REQUIRE(s.level_of("b") == 1);
  REQUIRE(s.level_of("c") == 2);
  REQUIRE(valid_stratification(negation_chain(), s));
}

TEST_CASE("negation-free programs live in stratum zero", "[datalog]") {
  const auto s = stratify(basic_translation());
  for (const auto& [pred, level] : s.level) REQUIRE(level == 0);
}

TEST_CASE("negative cycles are rejected with a cycle report", "[datalog]") {
  DatalogProgram p({
      {atom("a"), {}, {atom("b")}},
      {atom("b"), {}, {atom("a")}},
  });
  try {
    stratify(p);
    FAIL("expected not_stratifiable");
  } catch (const not_stratifiable& e) {
    REQUIRE(e.cycle().size() >= 3);
    REQUIRE(e.cycle().front() == e.cycle().back());
  }
  REQUIRE_THROWS_AS(evaluate(p), not_stratifiable);
}

TEST_CASE("negation inside one stratum is rejected even without cycles",
          "[datalog]") {
  // b depends negatively on itself through a.
  DatalogProgram p({
      {atom("a"), {}, {atom("b")}},
      {atom("b"), {atom("a")}, {}},
  });
  REQUIRE_THROWS_AS(stratify(p), not_stratifiable);
}

TEST_CASE("immediate consequence applies rules once", "[datalog]") {
  const std::set<DatalogRule> rules{dfact("a"), {atom("b"), {atom("a")}, {}}};
  REQUIRE(immediate_consequence(rules, {}) == Interpretation{{atom("a")}});
  REQUIRE(immediate_consequence(rules, {{atom("a")}}) ==
          Interpretation{{atom("a"), atom("b")}});
}

TEST_CASE("immediate consequence evaluates strata against decided atoms",
          "[datalog]") {
  const auto p = negation_chain();
  const auto s = stratify(p);
  Interpretation model;
  for (int level = 0; level <= s.max_level(); ++level) {
    std::set<DatalogRule> stratum;
    for (const auto& r : p.rules()) {
      if (s.level_of(r.head.predicate) == level) stratum.insert(r);
    }
    const Interpretation decided = model;
    while (true) {
      Interpretation next = immediate_consequence(stratum, model, decided);
      next.atoms.insert(model.atoms.begin(), model.atoms.end());
      if (next == model) break;
      model = std::move(next);
    }
  }
  REQUIRE(model == Interpretation{{atom("a"), atom("c")}});
}

TEST_CASE("evaluate computes the least stratified model", "[datalog]") {
  REQUIRE(evaluate(negation_chain()) == Interpretation{{atom("a"), atom("c")}});
  REQUIRE(evaluate(DatalogProgram()) == Interpretation{});

  const auto p = basic_translation();
  const auto& model = evaluate(p);
  REQUIRE(model.contains(mk("__r1", {"1", "2"})));
  for (const char* a : {"b(1)", "a(1)", "a(2)", "c(1)", "c(2)", "e(1)", "e(2)",
                        "n_d(1)", "n_d(2)"}) {
    INFO(a);
    REQUIRE(model.contains(atom(a)));
  }
  REQUIRE(model == evaluate_naive(p));
}

TEST_CASE("query projects the memoized model", "[datalog]") {
  const auto p = basic_translation();
  REQUIRE(query(p, "a") == AtomSet{atom("a(1)"), atom("a(2)")});
  REQUIRE(query(p, "__r1") == AtomSet{mk("__r1", {"1", "2"})});
  REQUIRE(query(p, "unused_pred").empty());

  const auto p2 = basic_translation_improved();
  REQUIRE(query(p2, "a") == AtomSet{atom("a(2)")});
  REQUIRE(query(p2, "__r3") == AtomSet{mk("__r3", {"2"})});
}

TEST_CASE("semi-naive evaluation agrees with the naive fixpoint", "[datalog]") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto p = random_stratifiable_program(seed);
    INFO("seed " << seed);
    REQUIRE(evaluate(p) == evaluate_naive(p));
  }
}

TEST_CASE("constructed negative cycles never stratify", "[datalog]") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    REQUIRE_THROWS_AS(stratify(random_nonstratifiable_program(seed)),
                      not_stratifiable);
  }
}

TEST_CASE("adding facts is monotone without negation", "[datalog]") {
  ProgramShape shape;
  shape.allow_negation = false;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = random_stratifiable_program(seed, shape);
    const auto before = evaluate(p);

    SplitMix64 rng(seed * 31 + 7);
    std::set<DatalogRule> rules = p.rules();
    Atom extra{"q" + std::to_string(rng.below(8)), {}};
    // match the predicate's arity as used in the program
    for (const auto& r : rules) {
      auto scan = [&](const Atom& a) {
        if (a.predicate == extra.predicate) {
          extra.args.assign(a.args.size(), constant("0"));
        }
      };
      scan(r.head);
      for (const auto& a : r.positive_body) scan(a);
    }
    rules.insert({extra, {}, {}});
    const auto after = evaluate(DatalogProgram(std::move(rules)));
    REQUIRE(std::includes(after.atoms.begin(), after.atoms.end(),
                          before.atoms.begin(), before.atoms.end()));
  }
}

TEST_CASE("the model does not depend on the stratification used", "[datalog]") {
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    const auto p = random_stratifiable_program(seed);
    const auto minimal = stratify(p);

    // Any strictly monotone relabelling of the levels is again a valid
    // stratification that slices the program differently.
    Stratification doubled, shifted;
    for (const auto& [pred, level] : minimal.level) {
      doubled.level[pred] = 2 * level;
      shifted.level[pred] = 3 * level + 1;
    }
    // A finer partition: one stratum per condensation component.
    Stratification by_component;
    {
      const auto g = aspic::detail::predicate_graph(p);
      const auto sccs = aspic::detail::strongly_connected_components(g.adj);
      for (std::size_t c = 0; c < sccs.size(); ++c) {
        const int level = static_cast<int>(sccs.size() - 1 - c);
        for (int v : sccs[c]) by_component.level[g.preds[v]] = level;
      }
    }
    REQUIRE(valid_stratification(p, doubled));
    REQUIRE(valid_stratification(p, shifted));
    REQUIRE(valid_stratification(p, by_component));
    const auto reference = evaluate_with(p, minimal);
    REQUIRE(evaluate_with(p, doubled) == reference);
    REQUIRE(evaluate_with(p, shifted) == reference);
    REQUIRE(evaluate_with(p, by_component) == reference);
  }
}

TEST_CASE("the fixpoint is a fixpoint of the consequence operator",
          "[datalog]") {
  ProgramShape shape;
  shape.ground_only = true;
  for (std::uint64_t seed = 300; seed < 340; ++seed) {
    const auto p = random_stratifiable_program(seed, shape);
    const auto strat = stratify(p);
    const auto model = evaluate(p);
    for (int level = 0; level <= strat.max_level(); ++level) {
      std::set<DatalogRule> stratum;
      for (const auto& r : p.rules()) {
        if (strat.level_of(r.head.predicate) == level) stratum.insert(r);
      }
      Interpretation lower, here;
      for (const auto& a : model.atoms) {
        if (strat.level_of(a.predicate) < level) lower.atoms.insert(a);
        if (strat.level_of(a.predicate) == level) here.atoms.insert(a);
      }
      REQUIRE(immediate_consequence(stratum, model, lower) == here);
    }
  }
}

TEST_CASE("model dump is sorted, one atom per line", "[datalog]") {
  REQUIRE(to_text(evaluate(negation_chain())) == "a\nc\n");
}
