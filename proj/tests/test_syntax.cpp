#include <catch2/catch_amalgamated.hpp>

#include "aspic/generate.hpp"
#include "aspic/parse.hpp"
#include "test_support.hpp"

using namespace aspic;
using namespace aspic::test;

TEST_CASE("single fact statement", "[syntax]") {
  Theory t = parse_theory("fact f(1,2).");
  REQUIRE(t.facts == AtomSet{atom("f(1,2)")});
  REQUIRE(t.assumptions.empty());
  REQUIRE(t.strict.empty());
}

TEST_CASE("full theory file parses to the expected structure", "[syntax]") {
  Theory t = basic_theory();
  REQUIRE(t.facts == AtomSet{atom("f(1,2)")});
  REQUIRE(t.assumptions == AtomSet{atom("a(1)"), atom("a(2)")});
  REQUIRE(t.strict.size() == 2);
  REQUIRE(t.defeasible.size() == 1);
  REQUIRE(t.contraries.size() == 3);

  const DefeasibleRule& d = *t.defeasible.begin();
  REQUIRE(d.name == patom("n_d(X)"));
  REQUIRE(d.head == patom("c(X)"));
  REQUIRE(d.body == AtomSet{patom("a(X)")});

  StrictRule b_rule{{patom("f(X,Y)")}, patom("b(X)")};
  StrictRule e_rule{{patom("c(X)")}, patom("e(X)")};
  REQUIRE(t.strict == std::set<StrictRule>{b_rule, e_rule});

  ContraryExpr ab{patom("a(X)"), {patom("b(X)")}};
  ContraryExpr nde{patom("n_d(X)"), {patom("e(X)")}};
  ContraryExpr cd{patom("c(X)"), {patom("d(X)")}};
  REQUIRE(t.contraries == std::set<ContraryExpr>{ab, nde, cd});
}

TEST_CASE("duplicate declarations are deduplicated", "[syntax]") {
  Theory t = parse_theory("fact p(1). fact p(1). assume q(2). assume q(2).");
  REQUIRE(t.facts.size() == 1);
  REQUIRE(t.assumptions.size() == 1);
}

TEST_CASE("arity clash is rejected with a position", "[syntax]") {
  try {
    parse_theory("b(X) <- f(X,Y). b(X,X) <- g(X).");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    REQUIRE(std::string(e.what()).find("arity") != std::string::npos);
    REQUIRE(e.line() == 1);
    REQUIRE(e.column() > 1);
  }
}

TEST_CASE("reserved predicate prefix is rejected", "[syntax]") {
  REQUIRE_THROWS_AS(parse_theory("fact __r1."), parse_error);
}

TEST_CASE("syntax errors carry line and column", "[syntax]") {
  try {
    parse_theory("fact p(1).\nfact q(;).\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    REQUIRE(e.line() == 2);
  }
}

TEST_CASE("keywords are only keywords before an atom", "[syntax]") {
  // "fact" used as an ordinary predicate.
  Theory t = parse_theory("fact(X) <- g(X). fact g(1).");
  REQUIRE(t.strict.size() == 1);
  REQUIRE(t.facts == AtomSet{atom("g(1)")});
}

TEST_CASE("non-ground knowledge base atoms are rejected", "[syntax]") {
  REQUIRE_THROWS_AS(parse_theory("fact p(X)."), parse_error);
  REQUIRE_THROWS_AS(parse_theory("assume p(X)."), parse_error);
}

TEST_CASE("validate accepts the working theory", "[syntax]") {
  REQUIRE(validate(basic_theory()).empty());
  REQUIRE(validate(chain_theory()).empty());
}

TEST_CASE("validate flags unsafe strict rules", "[syntax]") {
  Theory t;
  t.strict.insert({{patom("f(X)")}, patom("b(X,Y)")});
  const auto v = validate(t);
  REQUIRE(v.size() == 1);
  REQUIRE(v.front().message.find("unsafe rule") != std::string::npos);
  REQUIRE(v.front().message.find("'Y'") != std::string::npos);
}

TEST_CASE("validate flags constants in contrary expressions", "[syntax]") {
  Theory t;
  t.contraries.insert({patom("a(X)"), {atom("b(c)")}});
  const auto v = validate(t);
  REQUIRE_FALSE(v.empty());
  bool found = false;
  for (const auto& violation : v) {
    if (violation.message.find("constant in contrary") != std::string::npos) {
      found = true;
    }
  }
  REQUIRE(found);
}

TEST_CASE("validate flags duplicate rule name predicates", "[syntax]") {
  Theory t = parse_theory("n(X): p(X) <= q(X). n(X): r(X) <= q(X).");
  const auto v = validate(t);
  REQUIRE(v.size() == 1);
  REQUIRE(v.front().message.find("names 2 rules") != std::string::npos);
}

TEST_CASE("validate flags fact/assumption overlap", "[syntax]") {
  Theory t;
  t.facts.insert(atom("p(1)"));
  t.assumptions.insert(atom("p(1)"));
  const auto v = validate(t);
  REQUIRE(v.size() == 1);
}

TEST_CASE("herbrand universe collects exactly the constants", "[syntax]") {
  REQUIRE(herbrand_universe(basic_theory()) ==
          std::set<std::string>{"1", "2"});
  Theory zero = parse_theory("fact p. assume q. contrary q: p.");
  REQUIRE(herbrand_universe(zero).empty());
  Theory facts_only = parse_theory("fact p(3). fact q(7,3).");
  REQUIRE(herbrand_universe(facts_only) == std::set<std::string>{"3", "7"});
}

TEST_CASE("herbrand universe is monotone under theory union", "[syntax]") {
  for (int i = 0; i < 30; ++i) {
    GenConfig cfg;
    cfg.seed = 1000 + i;
    cfg.n_strict = 2;
    cfg.n_defeasible = 1;
    cfg.n_contraries = 2;
    cfg.n_kb_atoms = 4;
    cfg.const_hi = 5;
    GenConfig cfg2 = cfg;
    cfg2.seed = 2000 + i;
    Theory a = generate(cfg), b = generate(cfg2);
    Theory both = a;
    both.contraries.insert(b.contraries.begin(), b.contraries.end());
    both.strict.insert(b.strict.begin(), b.strict.end());
    both.facts.insert(b.facts.begin(), b.facts.end());
    // defeasible rules of b reuse name predicates of a; keep the union valid
    // by only merging the components above.
    const auto ua = herbrand_universe(a);
    const auto ub = herbrand_universe(both);
    REQUIRE(std::includes(ub.begin(), ub.end(), ua.begin(), ua.end()));
  }
}

TEST_CASE("print/parse round trip is stable", "[syntax]") {
  for (const char* text : {basic_theory_text(), chain_theory_text()}) {
    Theory once = parse_theory(text);
    Theory twice = parse_theory(to_text(once));
    REQUIRE(once == twice);
    REQUIRE(to_text(once) == to_text(twice));
  }
  for (int i = 0; i < 20; ++i) {
    GenConfig cfg;
    cfg.seed = 31 + i;
    cfg.n_kb_atoms = 10;
    cfg.const_hi = 9;
    Theory once = generate(cfg);
    Theory twice = parse_theory(to_text(once));
    REQUIRE(once == twice);
  }
}
