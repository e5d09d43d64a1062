#include "doctest.h"

#include <set>

#include "arith/codec.hpp"
#include "support/generators.hpp"

using namespace arith;
using namespace arith::codec;

namespace {

// Independent oracles: plain products of prime powers and naive factoring.
mpz_class direct_product(const std::vector<std::pair<unsigned long, unsigned long>>& powers) {
  mpz_class v = 1, pw;
  for (auto [p, e] : powers) {
    mpz_ui_pow_ui(pw.get_mpz_t(), p, e);
    v *= pw;
  }
  return v;
}

std::vector<unsigned long> naive_exponents(mpz_class v) {
  std::vector<unsigned long> out;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul}) {
    if (v == 1) break;
    unsigned long e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("symbol table") {
  CHECK(symbol_code({Symbol::Kind::Zero}) == 1);
  CHECK(symbol_code({Symbol::Kind::Times}) == 19);
  CHECK(symbol_code({Symbol::Kind::Var, 0}) == 21);
  CHECK(symbol_code({Symbol::Kind::Var, 5}) == 31);
  CHECK(symbol_from_code(GoedelNumber(23)) == Symbol{Symbol::Kind::Var, 1});
  CHECK_THROWS_AS(symbol_from_code(GoedelNumber(2)), DomainError);
  CHECK_THROWS_AS(symbol_from_code(GoedelNumber(0)), DomainError);
  CHECK(symbol_code({Symbol::Kind::Var, (UINT64_MAX - 21) / 2}) == UINT64_MAX);
  CHECK_THROWS_AS(symbol_code({Symbol::Kind::Var, (UINT64_MAX - 21) / 2 + 1}), DomainError);
}

TEST_CASE("encode_seq") {
  CHECK(encode_seq(std::vector<std::uint64_t>{1}) == GoedelNumber(2));
  CHECK(encode_seq(std::vector<std::uint64_t>{1, 15, 1}).value() == direct_product({{2, 1}, {3, 15}, {5, 1}}));
  CHECK(encode_seq(std::vector<std::uint64_t>{1, 15, 1}) == GoedelNumber(143489070));
  CHECK(encode_seq(std::vector<std::uint64_t>{5, 11}) == GoedelNumber(5668704));
  CHECK_THROWS_AS(encode_seq(std::vector<std::uint64_t>{}), DomainError);
  CHECK_THROWS_AS(encode_seq(std::vector<std::uint64_t>{3, 0}), DomainError);
  // Strictly monotone in each element.
  CHECK(encode_seq(std::vector<std::uint64_t>{1, 15, 2}) > encode_seq(std::vector<std::uint64_t>{1, 15, 1}));
}

TEST_CASE("decode_seq, len_l, gl") {
  CHECK(decode_seq(GoedelNumber(2)) == std::vector<GoedelNumber>{1});
  auto seq = decode_seq(GoedelNumber(143489070));
  CHECK(seq == std::vector<GoedelNumber>{1, 15, 1});
  CHECK(naive_exponents(143489070) == std::vector<unsigned long>{1, 15, 1});
  CHECK_THROWS_AS(decode_seq(GoedelNumber(5)), DomainError);
  CHECK_THROWS_AS(decode_seq(GoedelNumber(0)), DomainError);
  CHECK_THROWS_AS(decode_seq(GoedelNumber(1)), DomainError);
  CHECK_THROWS_AS(decode_seq(GoedelNumber(10)), DomainError);  // 2*5, gap at 3

  CHECK(len_l(GoedelNumber(2)) == 1);
  CHECK(len_l(GoedelNumber(143489070)) == 3);
  CHECK(len_l(GoedelNumber(5668704)) == 2);
  CHECK(gl(1, GoedelNumber(2)) == GoedelNumber(1));
  CHECK(gl(2, GoedelNumber(143489070)) == GoedelNumber(15));
  CHECK(gl(3, GoedelNumber(143489070)) == GoedelNumber(1));
  CHECK_THROWS_AS(gl(4, GoedelNumber(143489070)), DomainError);
  CHECK_THROWS_AS(gl(0, GoedelNumber(2)), DomainError);
}

TEST_CASE("formula_code") {
  CHECK(formula_code(parse("0=0")) == GoedelNumber(143489070));
  CHECK(formula_code(parse("x0=x0")).value() == direct_product({{2, 21}, {3, 15}, {5, 21}}));
  CHECK(formula_code(parse("~(0=0)")).value() ==
        direct_product({{2, 5}, {3, 11}, {5, 1}, {7, 15}, {11, 1}, {13, 13}}));
}

TEST_CASE("decode_formula") {
  CHECK(decode_formula(GoedelNumber(143489070)) == parse("0=0"));
  CHECK_THROWS_AS(decode_formula(GoedelNumber(2)), DomainError);  // "0" is a term
  CHECK_THROWS_AS(decode_formula(GoedelNumber(6)), DomainError);  // tokens 0,0
  CHECK_THROWS_AS(decode_formula(GoedelNumber(5)), DomainError);
  CHECK_THROWS_AS(decode_formula(encode_seq(std::vector<std::uint64_t>{2})), DomainError);
}

TEST_CASE("neg_code commutes with negate") {
  CHECK(neg_code(formula_code(parse("0=0"))) == formula_code(parse("~(0=0)")));
  CHECK(neg_code(formula_code(parse("~(0=0)"))) == formula_code(parse("~(~(0=0))")));
  CHECK_THROWS_AS(neg_code(GoedelNumber(7)), DomainError);
}

TEST_CASE("proof_code is a second-level sequence") {
  const GoedelNumber x = proof_code({parse("0=0")});
  CHECK_FALSE(x.is_explicit());
  CHECK(x == GoedelNumber::parse("2^143489070"));
  mpz_class oracle;
  mpz_ui_pow_ui(oracle.get_mpz_t(), 2, 143489070);  // the direct power, 18 MB
  CHECK(GoedelNumber(oracle) == x);
  CHECK(decode_proof(x) == std::vector<Formula>{parse("0=0")});
  CHECK_THROWS_AS(proof_code({}), DomainError);
}

TEST_CASE("rendering and parsing numbers") {
  CHECK(GoedelNumber(143489070).to_string(Render::Factored) == "2^1·3^15·5^1");
  CHECK(GoedelNumber(21).to_string(Render::Factored) == "21");
  const GoedelNumber p = proof_code({parse("x0=x0"), parse("all x0 (x0=x0)")});
  for (Render r : {Render::Decimal, Render::Factored}) {
    CHECK(GoedelNumber::parse(p.to_string(r)) == p);
  }
  CHECK(GoedelNumber::parse("2*3^15*5") == GoedelNumber(143489070));
  CHECK_THROWS_AS(GoedelNumber::parse("2^(2^100000)*7^5"), DomainError);
  CHECK_THROWS_AS(GoedelNumber::parse("12x"), DomainError);
}

TEST_CASE("ordering across representations") {
  const GoedelNumber small = proof_code({parse("0=0")});
  const GoedelNumber larger = proof_code({parse("x0=x0")});
  CHECK(GoedelNumber(12345) < small);
  CHECK(small < larger);
  // 2^a*3^b versus 2^c: decided on certified logarithms.
  const GoedelNumber two_lines = proof_code({parse("0=0"), parse("0=0")});
  CHECK(small < two_lines);
  const auto a = formula_code(parse("x0=x0")).value();
  const auto b = formula_code(parse("x1=x1")).value();
  CHECK(GoedelNumber::sequence({GoedelNumber(a), GoedelNumber(1)}) >
        GoedelNumber::sequence({GoedelNumber(mpz_class(a + 1))}));
  CHECK(GoedelNumber::sequence({GoedelNumber(b)}) < GoedelNumber::sequence({GoedelNumber(a), GoedelNumber(b - a)}));
  // 3^665 exceeds 2^1054 by a factor of about 2^0.00006.
  CHECK(GoedelNumber::sequence({GoedelNumber(a), GoedelNumber(665)}) >
        GoedelNumber::sequence({GoedelNumber(mpz_class(a + 1054))}));
  CHECK(GoedelNumber::sequence({GoedelNumber(a), GoedelNumber(665)}) <
        GoedelNumber::sequence({GoedelNumber(mpz_class(a + 1055))}));
}

TEST_CASE("property: token strings up to length 6 round-trip") {
  std::vector<std::uint64_t> alphabet = {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23};
  std::size_t strings = 0, formulas = 0;
  std::vector<std::uint64_t> cur;
  auto visit = [&](auto&& self, std::size_t len) -> void {
    if (!cur.empty()) {
      const GoedelNumber x = encode_seq(cur);
      std::vector<GoedelNumber> back = decode_seq(x);
      REQUIRE(back.size() == cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) REQUIRE(back[i] == GoedelNumber(cur[i]));
      if (is_formula_code(x)) {
        REQUIRE(formula_code(decode_formula(x)) == x);
        ++formulas;
      }
      ++strings;
    }
    if (len == 0) return;
    for (auto c : alphabet) {
      cur.push_back(c);
      self(self, len - 1);
      cur.pop_back();
    }
  };
  visit(visit, 4);
  CHECK(strings == 12 + 144 + 1728 + 20736);
  CHECK(formulas > 0);
}

TEST_CASE("property: injectivity and negation commutation on formulas up to size 7") {
  testing::Enumerator gen({0, 1});
  std::set<GoedelNumber> seen;
  for (const Formula& f : gen.formulas_up_to(7)) {
    const GoedelNumber c = formula_code(f);
    REQUIRE(seen.insert(c).second);
    REQUIRE(decode_formula(c) == f);
    REQUIRE(neg_code(c) == formula_code(negate(f)));
  }
}

TEST_CASE("level separation on a pool") {
  const std::vector<Formula> pool = {parse("0=0"), parse("x0=x0"), parse("S(0)=0"), parse("~(0=0)"),
                                     parse("all x0 (x0=x0)"), parse("all x0 ~(S(x0)=0)"),
                                     parse("(0=0 -> 0=0)"), parse("x1=0"), parse("(x0+0)=x0"),
                                     parse("exists x1 (x1=0)")};
  std::vector<GoedelNumber> numbers;
  for (const auto& f : pool) numbers.push_back(formula_code(f));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      numbers.push_back(proof_code({pool[i], pool[j]}));
    }
    numbers.push_back(proof_code({pool[i]}));
  }
  for (const auto& x : numbers) {
    bool as_formula = is_formula_code(x);
    bool as_proof = true;
    try {
      decode_proof(x);
    } catch (const DomainError&) {
      as_proof = false;
    }
    CHECK_FALSE((as_formula && as_proof));
  }
}

TEST_CASE("property: proof codes of up to 3 lines round-trip") {
  const std::vector<Formula> pool = {parse("0=0"), parse("x0=x0"), parse("S(0)=0"), parse("~(0=0)"),
                                     parse("all x0 (x0=x0)"), parse("all x0 ~(S(x0)=0)"),
                                     parse("(0=0 -> 0=0)"), parse("x1=0"), parse("(x0+0)=x0"),
                                     parse("exists x1 (x1=0)")};
  std::size_t n = 0;
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      for (const auto& c : pool) {
        const std::vector<Formula> lines{a, b, c};
        REQUIRE(decode_proof(proof_code(lines)) == lines);
        ++n;
      }
    }
  }
  CHECK(n == 1000);
}
