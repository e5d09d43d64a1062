#include "arith/codec.hpp"

#include <string>

namespace arith::codec {

std::uint64_t symbol_code(const Symbol& s) {
  switch (s.kind) {
    case Symbol::Kind::Zero: return 1;
    case Symbol::Kind::Succ: return 3;
    case Symbol::Kind::Not: return 5;
    case Symbol::Kind::Or: return 7;
    case Symbol::Kind::All: return 9;
    case Symbol::Kind::LParen: return 11;
    case Symbol::Kind::RParen: return 13;
    case Symbol::Kind::Equals: return 15;
    case Symbol::Kind::Plus: return 17;
    case Symbol::Kind::Times: return 19;
    case Symbol::Kind::Var:
      if (s.var > (UINT64_MAX - 21) / 2) throw DomainError("variable index too large to encode");
      return 21 + 2 * s.var;
  }
  return 0;
}

Symbol symbol_from_code(const GoedelNumber& code) {
  auto c = code.to_u64();
  if (!c || *c % 2 == 0) throw DomainError("not a symbol code: " + code.to_string());
  switch (*c) {
    case 1: return {Symbol::Kind::Zero};
    case 3: return {Symbol::Kind::Succ};
    case 5: return {Symbol::Kind::Not};
    case 7: return {Symbol::Kind::Or};
    case 9: return {Symbol::Kind::All};
    case 11: return {Symbol::Kind::LParen};
    case 13: return {Symbol::Kind::RParen};
    case 15: return {Symbol::Kind::Equals};
    case 17: return {Symbol::Kind::Plus};
    case 19: return {Symbol::Kind::Times};
    default: return {Symbol::Kind::Var, (*c - 21) / 2};
  }
}

GoedelNumber encode_seq(const std::vector<GoedelNumber>& items) { return GoedelNumber::sequence(items); }

GoedelNumber encode_seq(const std::vector<std::uint64_t>& items) {
  std::vector<GoedelNumber> g(items.begin(), items.end());
  return GoedelNumber::sequence(std::move(g));
}

std::vector<GoedelNumber> decode_seq(const GoedelNumber& x) {
  auto seq = x.sequence_exponents();
  if (!seq) throw DomainError("not a sequence code: " + x.to_string());
  return std::move(*seq);
}

std::size_t len_l(const GoedelNumber& x) { return decode_seq(x).size(); }

GoedelNumber gl(std::size_t i, const GoedelNumber& x) {
  auto seq = decode_seq(x);
  if (i < 1 || i > seq.size()) {
    throw DomainError("Gl index " + std::to_string(i) + " out of range 1.." + std::to_string(seq.size()));
  }
  return seq[i - 1];
}

GoedelNumber last(const GoedelNumber& x) {
  auto seq = decode_seq(x);
  return seq.back();
}

GoedelNumber formula_code(const Formula& f) {
  const auto syms = symbols(f);
  std::vector<GoedelNumber> codes;
  codes.reserve(syms.size());
  for (const auto& s : syms) codes.emplace_back(symbol_code(s));
  return GoedelNumber::sequence(std::move(codes));
}

Formula decode_formula(const GoedelNumber& x) {
  auto seq = x.sequence_exponents();
  if (!seq) throw DomainError("not a formula code (not a sequence code): " + x.to_string());
  std::vector<Symbol> syms;
  syms.reserve(seq->size());
  for (const auto& c : *seq) {
    try {
      syms.push_back(symbol_from_code(c));
    } catch (const DomainError&) {
      throw DomainError("not a formula code (unknown symbol code " + c.to_string() + ")");
    }
  }
  Formula f = Formula::eq(Term::zero(), Term::zero());
  if (!formula_from_symbols(syms, &f)) throw DomainError("not a formula code (ill-formed symbol string)");
  return f;
}

bool is_formula_code(const GoedelNumber& x) {
  try {
    decode_formula(x);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

GoedelNumber neg_code(const GoedelNumber& y) {
  decode_formula(y);  // rejects non-formulas
  // Arithmetically: prepend the codes of '~' and '(' and append ')'.
  auto seq = decode_seq(y);
  std::vector<GoedelNumber> out;
  out.reserve(seq.size() + 3);
  out.emplace_back(symbol_code({Symbol::Kind::Not}));
  out.emplace_back(symbol_code({Symbol::Kind::LParen}));
  for (auto& c : seq) out.push_back(std::move(c));
  out.emplace_back(symbol_code({Symbol::Kind::RParen}));
  return GoedelNumber::sequence(std::move(out));
}

GoedelNumber proof_code(const std::vector<Formula>& lines) {
  if (lines.empty()) throw DomainError("proof_code: empty proof");
  std::vector<GoedelNumber> codes;
  codes.reserve(lines.size());
  for (const auto& f : lines) codes.push_back(formula_code(f));
  return GoedelNumber::sequence(std::move(codes));
}

std::vector<Formula> decode_proof(const GoedelNumber& x) {
  auto seq = x.sequence_exponents();
  if (!seq) throw DomainError("not a proof code (not a sequence code)");
  std::vector<Formula> lines;
  lines.reserve(seq->size());
  for (const auto& c : *seq) lines.push_back(decode_formula(c));
  return lines;
}

}  // namespace arith::codec
