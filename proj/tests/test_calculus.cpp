#include "doctest.h"

#include "arith/calculus.hpp"
#include "arith/codec.hpp"
#include "arith/model.hpp"
#include "arith/universe.hpp"

using namespace arith;

namespace {

GoedelNumber code_of(std::initializer_list<const char*> lines) {
  std::vector<Formula> fs;
  for (const char* l : lines) fs.push_back(parse(l));
  return codec::proof_code(fs);
}

GoedelNumber fcode(const char* f) { return codec::formula_code(parse(f)); }

const char* const kRefutation[] = {
    "all x0 ~(S(x0)=0)",
    "(all x0 ~(S(x0)=0) -> ~(S(0)=0))",
    "~(S(0)=0)",
};

GoedelNumber refutation_code() { return code_of({kRefutation[0], kRefutation[1], kRefutation[2]}); }

}  // namespace

TEST_CASE("closed arithmetic axioms are recognized by identity") {
  CHECK(is_axiom(parse("all x0 ~(S(x0)=0)")) == "A1");
  CHECK(is_axiom(parse("all x0 ((x0*0)=0)")) == "A5");
  CHECK(is_axiom(parse("all x1 ~(S(x1)=0)")) == std::nullopt);  // alphabetic variant is not A1
  CHECK(Calculus::standard().arithmetic_axioms().size() == 7);
}

TEST_CASE("logical schemas") {
  CHECK(is_axiom(parse("(~(0=0) | 0=0)")) == std::nullopt);
  CHECK(is_axiom(parse("x0=x0")) == "EQ-refl");
  CHECK(is_axiom(parse("0=0")) == std::nullopt);
  CHECK(is_axiom(parse("(x0=x1 -> (x0=x1 -> x1=x1))")) == "EQ-eq");
  CHECK(is_axiom(parse("(x0=x1 -> S(x0)=S(x1))")) == "EQ-S");
  CHECK(is_axiom(parse("(x0=x1 -> (x0+x1)=(x1+x1))")) == "EQ-add-l");
  CHECK(is_axiom(parse("(x0=x1 -> (x1*x0)=(x1*x1))")) == "EQ-mul-r");
  CHECK(is_axiom(parse("(0=0 -> (x0=x1 -> 0=0))")) == "L1");
  CHECK(is_axiom(parse("((0=0 -> (x0=x0 -> x1=x1)) -> ((0=0 -> x0=x0) -> (0=0 -> x1=x1)))")) == "L2");
  CHECK(is_axiom(parse("((~(0=0) -> ~(x0=x0)) -> (x0=x0 -> 0=0))")) == "L3");
  CHECK(is_axiom(parse("(all x0 (x0=x1) -> S(0)=x1)")) == "Q1");
  CHECK(is_axiom(parse("(all x0 (x0=x0) -> x1=x1)")) == std::nullopt);  // open term is not instantiable
  CHECK(is_axiom(parse("(all x0 (0=0 -> x0=x0) -> (0=0 -> all x0 (x0=x0)))")) == "Q2");
  CHECK(is_axiom(parse("(all x0 (x0=x0 -> x0=x0) -> (x0=x0 -> all x0 (x0=x0)))")) == std::nullopt);
}

TEST_CASE("Q1 respects inner binders") {
  CHECK(is_axiom(parse("(all x0 (x0=0 | all x0 (x0=0)) -> (S(0)=0 | all x0 (x0=0)))")) == "Q1");
  CHECK(is_axiom(parse("(all x0 (x0=0 | all x0 (x0=0)) -> (S(0)=0 | all x0 (S(0)=0)))")) == std::nullopt);
  CHECK(is_axiom(parse("(all x0 (x0=x0) -> 0=S(0))")) == std::nullopt);  // inconsistent instantiation
}

TEST_CASE("immediate consequence") {
  std::vector<Formula> earlier = {parse("(~(S(0)=0) | 0=0)"), parse("S(0)=0")};
  CHECK(is_immediate_consequence(parse("0=0"), earlier) == Justification{ModusPonens{2, 1}});
  // The minor premise must be the antecedent itself, not its negation.
  earlier[1] = parse("~(S(0)=0)");
  CHECK(is_immediate_consequence(parse("0=0"), earlier) == std::nullopt);

  const std::vector<Formula> one = {parse("x0=0")};
  CHECK(is_immediate_consequence(parse("all x0 (x0=0)"), one) == Justification{Generalization{1, 0}});
  CHECK(is_immediate_consequence(parse("all x1 (x0=0)"), one) == Justification{Generalization{1, 1}});
  CHECK(is_immediate_consequence(parse("x0=0"), one) == std::nullopt);

  // Lexicographically least premise pair wins.
  const std::vector<Formula> dup = {parse("0=0"), parse("(0=0 -> x0=x0)"), parse("0=0"), parse("(0=0 -> x0=x0)")};
  CHECK(is_immediate_consequence(parse("x0=x0"), dup) == Justification{ModusPonens{1, 2}});
}

TEST_CASE("Bw on codes") {
  CHECK(bw(code_of({"x0=x0"})));
  CHECK_FALSE(bw(GoedelNumber(0)));
  CHECK_FALSE(bw(GoedelNumber(1)));
  CHECK_FALSE(bw(code_of({"0=0"})));
  CHECK_FALSE(bw(fcode("x0=x0")));  // a formula code is not a proof of itself
  CHECK(bw(refutation_code()));
  CHECK_FALSE(bw(code_of({kRefutation[1], kRefutation[2]})));
}

TEST_CASE("xBy, xWy and the characteristic functions") {
  const GoedelNumber r = refutation_code();
  const GoedelNumber y = fcode("S(0)=0");
  const GoedelNumber ny = fcode("~(S(0)=0)");
  CHECK(xWy(r, y));
  CHECK(xBy(r, ny));
  CHECK_FALSE(xBy(r, y));
  CHECK_FALSE(xWy(r, ny));
  CHECK(cW(r, y) == 0);
  CHECK(cB(r, y) == 1);
  CHECK(cB(r, ny) == 0);
  // Non-formula y: never refuted.
  CHECK_FALSE(xWy(r, GoedelNumber(6)));
  CHECK(cW(r, GoedelNumber(6)) == 1);

  const GoedelNumber p = code_of({"x0=x0"});
  CHECK(xBy(p, fcode("x0=x0")));
  CHECK_FALSE(xWy(p, fcode("x0=x0")));
}

TEST_CASE("exclusivity and duality on the proof universe") {
  const auto& c = Calculus::standard();
  const auto universe = proof_universe(c);
  REQUIRE(universe.size() >= 100);
  std::size_t refutations = 0;
  for (const auto& p : universe) {
    REQUIRE(c.is_proof(p.lines));
    REQUIRE(first_invalid_line(c, p) == std::nullopt);
    const GoedelNumber x = p.code();
    const GoedelNumber last = codec::formula_code(p.conclusion());
    CHECK(c.xBy(x, last));
    CHECK_FALSE(c.xWy(x, last));
    if (p.conclusion().kind() == Formula::Kind::Not) {
      const GoedelNumber inner = codec::formula_code(p.conclusion().body());
      ++refutations;
      CHECK(c.xWy(x, inner));
      CHECK_FALSE(c.xBy(x, inner));
      CHECK(c.cW(x, inner) == 0);
      CHECK(c.cB(x, inner) == 1);
    }
  }
  CHECK(refutations > 0);
}

TEST_CASE("proof files") {
  const std::string text =
      "# refutation of S(0)=0\n"
      "all x0 ~(S(x0)=0) ; ax:A1\n"
      "\n"
      "(all x0 ~(S(x0)=0) -> ~(S(0)=0)) ; ax:Q1\n"
      "~(S(0)=0) ; mp:1,2\n";
  const ProofObject p = parse_proof_file(text);
  REQUIRE(p.lines.size() == 3);
  CHECK(first_invalid_line(Calculus::standard(), p) == std::nullopt);
  CHECK(p.code() == refutation_code());
  CHECK(parse_proof_file(format_proof_file(p)).lines == p.lines);

  ProofObject bad = p;
  bad.justs[2] = ModusPonens{2, 1};
  CHECK(first_invalid_line(Calculus::standard(), bad) == 3);
  bad = p;
  bad.justs[0] = AxiomInstance{"A2"};
  CHECK(first_invalid_line(Calculus::standard(), bad) == 1);

  CHECK_THROWS_AS(parse_proof_file("0=0 ax:A1\n"), ProofFileError);
  CHECK_THROWS_AS(parse_proof_file("0=0 ; mp:1\n"), ProofFileError);
  CHECK_THROWS_AS(parse_proof_file("# nothing\n"), ProofFileError);
  try {
    parse_proof_file("x0=x0 ; ax:EQ-refl\n((0=0 ; ax:L1\n");
    FAIL("expected ProofFileError");
  } catch (const ProofFileError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("justify attaches canonical justifications") {
  std::vector<Formula> lines = {parse(kRefutation[0]), parse(kRefutation[1]), parse(kRefutation[2])};
  const auto p = justify(Calculus::standard(), lines);
  REQUIRE(p);
  CHECK(to_string(p->justs[0]) == "ax:A1");
  CHECK(to_string(p->justs[1]) == "ax:Q1");
  CHECK(to_string(p->justs[2]) == "mp:1,2");
  lines.erase(lines.begin());
  CHECK_FALSE(justify(Calculus::standard(), lines));
}

TEST_CASE("extra axioms") {
  const Calculus bad = Calculus::standard().with_extra_axioms(
      {{"X1", parse("S(0)=0")}, {"X2", parse("~(S(0)=0)")}});
  CHECK(bad.is_axiom(parse("S(0)=0")) == "X1");
  CHECK(bad.schema_ids()[7] == "X1");
  const GoedelNumber y = fcode("S(0)=0");
  CHECK(bad.xBy(code_of({"S(0)=0"}), y));
  CHECK(bad.xWy(code_of({"~(S(0)=0)"}), y));
  CHECK_FALSE(Calculus::standard().bw(code_of({"S(0)=0"})));
}

TEST_CASE("mutations are rejected") {
  const auto& c = Calculus::standard();
  const auto universe = proof_universe(c);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < universe.size(); i += 7) {
    for (const auto& m : invalidating_mutants(c, universe[i].lines)) {
      CHECK_FALSE(c.bw(codec::proof_code(m.lines)));
      ++checked;
    }
  }
  CHECK(checked > 100);
  CHECK(line_mutations(parse("(0=0 | x0=x1)")).size() == 5);
}

TEST_CASE("standard model evaluation") {
  CHECK(eval_closed(parse("S(0)=S(0)"), 10) == Truth::True);
  CHECK(eval_closed(parse("(S(S(0))*S(S(0)))=S(S(S(S(0))))"), 10) == Truth::True);
  CHECK(eval_closed(parse("~(S(0)=0)"), 10) == Truth::True);
  CHECK(eval_closed(parse("all x0 (x0=0)"), 10) == Truth::False);
  CHECK(eval_closed(parse("all x0 ((x0+0)=x0)"), 10) == Truth::Unknown);
  CHECK(eval_closed(parse("(all x0 (x0=x0) | 0=0)"), 10) == Truth::True);
  CHECK(eval_closed(parse("exists x0 (S(x0)=S(S(0)))"), 10) == Truth::True);
  CHECK_THROWS_AS(eval_closed(parse("x0=0"), 10), std::invalid_argument);
  // Vacuous and shadowed binders: the outer quantifiers add nothing.
  CHECK(eval_closed(parse("all x1 (0=0)"), 10) == Truth::Unknown);
  CHECK(eval_closed(parse("all x1 ~(0=0)"), 10) == Truth::False);
  CHECK(eval_closed(parse("all x0 all x0 all x1 (x0=x1)"), 1000) == Truth::False);
  CHECK(eval_closed(parse("all x1 all x0 ~(x0=x1)"), 10) == Truth::False);
  // x^16 wraps to 0 in a machine word at x = 16; the exact value must be used.
  Term pow = Term::var(0);
  for (int i = 0; i < 4; ++i) pow = Term::mul(pow, pow);
  const Formula nonzero =
      Formula::forall(0, Formula::disj(Formula::negation(Formula::eq(pow, Term::zero())), parse("x0=0")));
  CHECK(eval_closed(nonzero, 20) == Truth::Unknown);
}
