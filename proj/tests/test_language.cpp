#include "doctest.h"

#include "arith/language.hpp"
#include "support/generators.hpp"

using namespace arith;

TEST_CASE("parse: smallest sentence and direct grammar reading") {
  CHECK(parse("0=0") == Formula::eq(Term::zero(), Term::zero()));
  CHECK(parse("all x0 ~(S(x0)=0)") ==
        Formula::forall(0, Formula::negation(Formula::eq(Term::succ(Term::var(0)), Term::zero()))));
}

TEST_CASE("parse: malformed input reports a position") {
  CHECK_THROWS_AS(parse("((0=0)"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("0"), ParseError);
  CHECK_THROWS_AS(parse("0=0)"), ParseError);
  CHECK_THROWS_AS(parse("x=0"), ParseError);
  CHECK_THROWS_AS(parse("~0=0"), ParseError);
  try {
    parse("((0=0)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  try {
    parse("0=0 # 1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("parse: sugar expands into the core connectives") {
  const Formula p = parse("0=0");
  const Formula q = parse("S(0)=0");
  CHECK(parse("(0=0 -> S(0)=0)") == Formula::disj(Formula::negation(p), q));
  CHECK(parse("(0=0 & S(0)=0)") ==
        Formula::negation(Formula::disj(Formula::negation(p), Formula::negation(q))));
  CHECK(parse("exists x1 (x1=0)") ==
        Formula::negation(Formula::forall(1, Formula::negation(parse("x1=0")))));
  CHECK(print(parse("(0=0 -> S(0)=0)")) == "(~(0=0)|S(0)=0)");
}

TEST_CASE("parse: the arithmetic axioms as written") {
  CHECK_NOTHROW(parse("all x0 (all x1 ((S(x0)=S(x1)) -> (x0=x1)))"));
  CHECK_NOTHROW(parse("all x0 ((x0+0)=x0)"));
  CHECK_NOTHROW(parse("all x0 (all x1 ((x0*S(x1))=((x0*x1)+x0)))"));
  CHECK_NOTHROW(parse("all x0 (~(x0=0) -> exists x1 (x0=S(x1)))"));
  CHECK(parse("all x0 ((x0+0)=x0)") ==
        Formula::forall(0, Formula::eq(Term::add(Term::var(0), Term::zero()), Term::var(0))));
}

TEST_CASE("print: canonical forms") {
  CHECK(print(Formula::eq(Term::zero(), Term::zero())) == "0=0");
  CHECK(print(Formula::negation(parse("0=0"))) == "~(0=0)");
  CHECK(print(Formula::forall(0, parse("x0=x0"))) == "all x0 (x0=x0)");
  CHECK(print(parse("((x0 + 0) * S(x12)) = x3")) == "((x0+0)*S(x12))=x3");
}

TEST_CASE("free_vars") {
  CHECK(free_vars(parse("0=0")).empty());
  CHECK(free_vars(parse("x0=0")) == std::set<VarIndex>{0});
  CHECK(free_vars(parse("all x0 (x0=x1)")) == std::set<VarIndex>{1});
  CHECK(free_vars(parse("(x0=0 | all x0 (x0=x0))")) == std::set<VarIndex>{0});
  CHECK(all_vars(parse("all x3 (x0=0)")) == std::set<VarIndex>{0, 3});
}

TEST_CASE("subst_numeral") {
  CHECK(print(subst_numeral(parse("x0=0"), 0, 0)) == "0=0");
  CHECK(print(subst_numeral(parse("x0=0"), 0, 2)) == "S(S(0))=0");
  CHECK(print(subst_numeral(parse("all x0 (x0=x1)"), 1, 1)) == "all x0 (x0=S(0))");
  CHECK(print(subst_numeral(parse("(x0=0 | all x0 (x0=x0))"), 0, 1)) == "(S(0)=0|all x0 (x0=x0))");
  CHECK_THROWS_AS(subst_numeral(parse("0=0"), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(subst_numeral(parse("all x0 (x0=0)"), 0, 1), std::invalid_argument);
}

TEST_CASE("negate never normalizes") {
  CHECK(print(negate(parse("0=0"))) == "~(0=0)");
  CHECK(print(negate(parse("~(0=0)"))) == "~(~(0=0))");
  CHECK(print(negate(parse("all x0 (x0=x0)"))) == "~(all x0 (x0=x0))");
}

TEST_CASE("sizes") {
  const Formula q1 = parse("(all x0 ~(S(x0)=0) -> ~(S(0)=0))");
  CHECK(q1.node_count() == 13);
  CHECK(q1.logical_size() == 7);
  CHECK(parse("0=0").logical_size() == 1);
}

TEST_CASE("canonical symbol strings") {
  Formula f = parse("0=0");
  CHECK(formula_from_symbols(symbols(parse("all x0 (x0=x0)")), &f));
  CHECK(f == parse("all x0 (x0=x0)"));
  // Redundant parentheses are not a canonical spelling.
  std::vector<Symbol> redundant = symbols(parse("0=0"));
  redundant.insert(redundant.begin(), {Symbol::Kind::LParen});
  redundant.push_back({Symbol::Kind::RParen});
  CHECK_FALSE(formula_from_symbols(redundant, nullptr));
  CHECK_FALSE(formula_from_symbols({{Symbol::Kind::Zero}}, nullptr));
}

TEST_CASE("property: round trips and substitution over generated formulas") {
  testing::Enumerator gen({0, 1});
  const auto pool = gen.formulas_up_to(9);
  REQUIRE(pool.size() > 10000);
  std::size_t checked = 0;
  for (const Formula& f : pool) {
    REQUIRE(parse(print(f)) == f);
    Formula back = f;
    REQUIRE(formula_from_symbols(symbols(f), &back));
    REQUIRE(back == f);
    REQUIRE_FALSE(negate(negate(f)) == f);
    for (VarIndex v : free_vars(f)) {
      auto expected = free_vars(f);
      expected.erase(v);
      REQUIRE(free_vars(subst_numeral(f, v, 3)) == expected);
    }
    ++checked;
  }
  CHECK(checked == pool.size());
}
