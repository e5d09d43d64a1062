#include "arith/calculus.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "arith/codec.hpp"

namespace arith {

namespace {

using FK = Formula::Kind;
using TK = Term::Kind;

bool is_var(const Term& t) { return t.kind() == TK::Var; }

// --- propositional schemas ---------------------------------------------------

// p -> (q -> p)
bool match_l1(const Formula& f) {
  Formula p = f, rest = f, q = f, p2 = f;
  return f.as_implication(&p, &rest) && rest.as_implication(&q, &p2) && p2 == p;
}

// (p -> (q -> r)) -> ((p -> q) -> (p -> r))
bool match_l2(const Formula& f) {
  Formula a = f, b = f;
  if (!f.as_implication(&a, &b)) return false;
  Formula p = f, qr = f, q = f, r = f;
  if (!a.as_implication(&p, &qr) || !qr.as_implication(&q, &r)) return false;
  Formula pq = f, pr = f;
  if (!b.as_implication(&pq, &pr)) return false;
  Formula p1 = f, q1 = f, p2 = f, r2 = f;
  if (!pq.as_implication(&p1, &q1) || !pr.as_implication(&p2, &r2)) return false;
  return p1 == p && p2 == p && q1 == q && r2 == r;
}

// (~q -> ~p) -> (p -> q)
bool match_l3(const Formula& f) {
  Formula a = f, b = f;
  if (!f.as_implication(&a, &b)) return false;
  Formula nq = f, np = f, p = f, q = f;
  if (!a.as_implication(&nq, &np) || !b.as_implication(&p, &q)) return false;
  return nq.kind() == FK::Not && np.kind() == FK::Not && nq.body() == q && np.body() == p;
}

// --- quantifier schemas ------------------------------------------------------

// Does `inst` equal `pattern` with every free x_v replaced by one closed term?
bool match_term_inst(const Term& pattern, const Term& inst, VarIndex v, std::optional<Term>& t) {
  if (pattern.kind() == TK::Var && pattern.var_index() == v) {
    if (!inst.is_closed()) return false;
    if (t) return *t == inst;
    t = inst;
    return true;
  }
  if (pattern.kind() != inst.kind()) return false;
  switch (pattern.kind()) {
    case TK::Zero: return true;
    case TK::Var: return pattern.var_index() == inst.var_index();
    case TK::Succ: return match_term_inst(pattern.lhs(), inst.lhs(), v, t);
    case TK::Add:
    case TK::Mul:
      return match_term_inst(pattern.lhs(), inst.lhs(), v, t) && match_term_inst(pattern.rhs(), inst.rhs(), v, t);
  }
  return false;
}

bool match_formula_inst(const Formula& pattern, const Formula& inst, VarIndex v, std::optional<Term>& t) {
  if (pattern.kind() != inst.kind()) return false;
  switch (pattern.kind()) {
    case FK::Eq:
      return match_term_inst(pattern.left_term(), inst.left_term(), v, t) &&
             match_term_inst(pattern.right_term(), inst.right_term(), v, t);
    case FK::Not: return match_formula_inst(pattern.body(), inst.body(), v, t);
    case FK::Or:
      return match_formula_inst(pattern.body(), inst.body(), v, t) &&
             match_formula_inst(pattern.right(), inst.right(), v, t);
    case FK::Forall:
      if (pattern.bound_var() != inst.bound_var()) return false;
      if (pattern.bound_var() == v) return pattern.body() == inst.body();
      return match_formula_inst(pattern.body(), inst.body(), v, t);
  }
  return false;
}

// all v p -> p[v := t], t closed
bool match_q1(const Formula& f) {
  Formula a = f, b = f;
  if (!f.as_implication(&a, &b) || a.kind() != FK::Forall) return false;
  std::optional<Term> t;
  return match_formula_inst(a.body(), b, a.bound_var(), t);
}

// all v (p -> q) -> (p -> all v q), v not free in p
bool match_q2(const Formula& f) {
  Formula a = f, b = f;
  if (!f.as_implication(&a, &b) || a.kind() != FK::Forall) return false;
  const VarIndex v = a.bound_var();
  Formula p = f, q = f, p2 = f, aq = f;
  if (!a.body().as_implication(&p, &q) || !b.as_implication(&p2, &aq)) return false;
  if (aq.kind() != FK::Forall || aq.bound_var() != v) return false;
  return p2 == p && aq.body() == q && !free_vars(p).contains(v);
}

// --- equality schemas (variables only) -----------------------------------------

bool var_eq(const Formula& f, VarIndex* i, VarIndex* j) {
  if (f.kind() != FK::Eq || !is_var(f.left_term()) || !is_var(f.right_term())) return false;
  *i = f.left_term().var_index();
  *j = f.right_term().var_index();
  return true;
}

// x_i = x_i
bool match_eq_refl(const Formula& f) {
  VarIndex i = 0, j = 0;
  return var_eq(f, &i, &j) && i == j;
}

// x_i = x_j -> (x_i = x_k -> x_j = x_k)
bool match_eq_eq(const Formula& f) {
  Formula a = f, b = f, c = f, d = f;
  if (!f.as_implication(&a, &b) || !b.as_implication(&c, &d)) return false;
  VarIndex i = 0, j = 0, i2 = 0, k = 0, j2 = 0, k2 = 0;
  return var_eq(a, &i, &j) && var_eq(c, &i2, &k) && var_eq(d, &j2, &k2) && i2 == i && j2 == j && k2 == k;
}

// x_i = x_j -> S(x_i) = S(x_j)
bool match_eq_succ(const Formula& f) {
  Formula a = f, b = f;
  VarIndex i = 0, j = 0;
  if (!f.as_implication(&a, &b) || !var_eq(a, &i, &j) || b.kind() != FK::Eq) return false;
  return b.left_term() == Term::succ(Term::var(i)) && b.right_term() == Term::succ(Term::var(j));
}

// x_i = x_j -> op(x_i, x_k) = op(x_j, x_k)   (left)  or
// x_i = x_j -> op(x_k, x_i) = op(x_k, x_j)   (right)
bool match_eq_binop(const Formula& f, TK op, bool left) {
  Formula a = f, b = f;
  VarIndex i = 0, j = 0;
  if (!f.as_implication(&a, &b) || !var_eq(a, &i, &j) || b.kind() != FK::Eq) return false;
  const Term& l = b.left_term();
  const Term& r = b.right_term();
  if (l.kind() != op || r.kind() != op) return false;
  const Term& l_moving = left ? l.lhs() : l.rhs();
  const Term& l_fixed = left ? l.rhs() : l.lhs();
  const Term& r_moving = left ? r.lhs() : r.rhs();
  const Term& r_fixed = left ? r.rhs() : r.lhs();
  return l_moving == Term::var(i) && r_moving == Term::var(j) && is_var(l_fixed) && l_fixed == r_fixed;
}

const std::vector<std::pair<std::string, bool (*)(const Formula&)>>& logical_schemas() {
  static const std::vector<std::pair<std::string, bool (*)(const Formula&)>> table = {
      {"EQ-refl", match_eq_refl},
      {"EQ-eq", match_eq_eq},
      {"EQ-S", match_eq_succ},
      {"EQ-add-l", [](const Formula& f) { return match_eq_binop(f, TK::Add, true); }},
      {"EQ-add-r", [](const Formula& f) { return match_eq_binop(f, TK::Add, false); }},
      {"EQ-mul-l", [](const Formula& f) { return match_eq_binop(f, TK::Mul, true); }},
      {"EQ-mul-r", [](const Formula& f) { return match_eq_binop(f, TK::Mul, false); }},
      {"L1", match_l1},
      {"L2", match_l2},
      {"L3", match_l3},
      {"Q1", match_q1},
      {"Q2", match_q2},
  };
  return table;
}

}  // namespace

std::string to_string(const Justification& j) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AxiomInstance>) {
          return "ax:" + v.schema;
        } else if constexpr (std::is_same_v<T, ModusPonens>) {
          return "mp:" + std::to_string(v.minor) + "," + std::to_string(v.major);
        } else {
          return "gen:" + std::to_string(v.line) + ",x" + std::to_string(v.var);
        }
      },
      j);
}

Calculus::Calculus() {
  axioms_ = {
      {"A1", parse("all x0 ~(S(x0)=0)")},
      {"A2", parse("all x0 (all x1 ((S(x0)=S(x1)) -> (x0=x1)))")},
      {"A3", parse("all x0 ((x0+0)=x0)")},
      {"A4", parse("all x0 (all x1 ((x0+S(x1))=S((x0+x1))))")},
      {"A5", parse("all x0 ((x0*0)=0)")},
      {"A6", parse("all x0 (all x1 ((x0*S(x1))=((x0*x1)+x0)))")},
      {"A7", parse("all x0 (~(x0=0) -> exists x1 (x0=S(x1)))")},
  };
  for (const auto& a : axioms_) schema_ids_.push_back(a.id);
  for (const auto& s : logical_schemas()) schema_ids_.push_back(s.first);
}

const Calculus& Calculus::standard() {
  static const Calculus c;
  return c;
}

Calculus Calculus::with_extra_axioms(std::vector<NamedAxiom> extra) const {
  Calculus c = *this;
  for (auto& a : extra) {
    c.schema_ids_.insert(c.schema_ids_.begin() + static_cast<std::ptrdiff_t>(c.axioms_.size()), a.id);
    c.axioms_.push_back(std::move(a));
  }
  return c;
}

bool Calculus::is_instance_of(const Formula& f, std::string_view schema) const {
  for (const auto& a : axioms_) {
    if (a.id == schema) return a.formula == f;
  }
  for (const auto& [id, match] : logical_schemas()) {
    if (id == schema) return match(f);
  }
  return false;
}

std::optional<std::string> Calculus::is_axiom(const Formula& f) const {
  for (const auto& a : axioms_) {
    if (a.formula == f) return a.id;
  }
  for (const auto& [id, match] : logical_schemas()) {
    if (match(f)) return id;
  }
  return std::nullopt;
}

std::optional<Justification> Calculus::is_immediate_consequence(const Formula& f,
                                                                std::span<const Formula> earlier) const {
  std::optional<ModusPonens> best;
  for (std::size_t j = 0; j < earlier.size(); ++j) {
    Formula a = f, c = f;
    if (!earlier[j].as_implication(&a, &c) || !(c == f)) continue;
    for (std::size_t i = 0; i < earlier.size(); ++i) {
      if (earlier[i] == a) {
        const ModusPonens mp{i + 1, j + 1};
        if (!best || std::pair(mp.minor, mp.major) < std::pair(best->minor, best->major)) best = mp;
        break;
      }
    }
  }
  if (best) return *best;
  if (f.kind() == FK::Forall) {
    for (std::size_t i = 0; i < earlier.size(); ++i) {
      if (earlier[i] == f.body()) return Generalization{i + 1, f.bound_var()};
    }
  }
  return std::nullopt;
}

bool Calculus::justifies(const Justification& j, std::span<const Formula> lines, std::size_t index) const {
  if (index < 1 || index > lines.size()) return false;
  const Formula& f = lines[index - 1];
  if (const auto* ax = std::get_if<AxiomInstance>(&j)) return is_instance_of(f, ax->schema);
  if (const auto* mp = std::get_if<ModusPonens>(&j)) {
    if (mp->minor < 1 || mp->minor >= index || mp->major < 1 || mp->major >= index) return false;
    return lines[mp->major - 1] == Formula::implies(lines[mp->minor - 1], f);
  }
  const auto& gen = std::get<Generalization>(j);
  if (gen.line < 1 || gen.line >= index) return false;
  return f == Formula::forall(gen.var, lines[gen.line - 1]);
}

bool Calculus::is_proof(std::span<const Formula> lines) const {
  if (lines.empty()) return false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_axiom(lines[i])) continue;
    if (!is_immediate_consequence(lines[i], lines.first(i))) return false;
  }
  return true;
}

bool Calculus::bw(const GoedelNumber& x) const {
  std::vector<Formula> lines;
  try {
    lines = codec::decode_proof(x);
  } catch (const DomainError&) {
    return false;
  }
  return is_proof(lines);
}

bool Calculus::xBy(const GoedelNumber& x, const GoedelNumber& y) const {
  auto seq = x.sequence_exponents();
  if (!seq || !(seq->back() == y)) return false;
  return bw(x);
}

bool Calculus::xWy(const GoedelNumber& x, const GoedelNumber& y) const {
  auto seq = x.sequence_exponents();
  if (!seq) return false;
  GoedelNumber neg;
  try {
    neg = codec::neg_code(y);
  } catch (const DomainError&) {
    return false;  // the last line of a proof is always a formula
  }
  if (!(seq->back() == neg)) return false;
  return bw(x);
}

std::optional<std::string> is_axiom(const Formula& f) { return Calculus::standard().is_axiom(f); }
std::optional<Justification> is_immediate_consequence(const Formula& f, std::span<const Formula> earlier) {
  return Calculus::standard().is_immediate_consequence(f, earlier);
}
bool bw(const GoedelNumber& x) { return Calculus::standard().bw(x); }
bool xBy(const GoedelNumber& x, const GoedelNumber& y) { return Calculus::standard().xBy(x, y); }
bool xWy(const GoedelNumber& x, const GoedelNumber& y) { return Calculus::standard().xWy(x, y); }
int cB(const GoedelNumber& x, const GoedelNumber& y) { return Calculus::standard().cB(x, y); }
int cW(const GoedelNumber& x, const GoedelNumber& y) { return Calculus::standard().cW(x, y); }

GoedelNumber ProofObject::code() const { return codec::proof_code(lines); }

// --- proof files -------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
bool to_number(std::string_view s, T* out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && p == s.data() + s.size();
}

Justification parse_justification(std::string_view s, std::size_t line_no) {
  s = trim(s);
  if (s.starts_with("ax:")) {
    auto id = trim(s.substr(3));
    if (id.empty()) throw ProofFileError("empty axiom id", line_no);
    return AxiomInstance{std::string(id)};
  }
  const auto comma = s.find(',');
  if (s.starts_with("mp:") && comma != std::string_view::npos) {
    ModusPonens mp{};
    if (to_number(s.substr(3, comma - 3), &mp.minor) && to_number(s.substr(comma + 1), &mp.major)) return mp;
  }
  if (s.starts_with("gen:") && comma != std::string_view::npos) {
    Generalization g{};
    auto v = trim(s.substr(comma + 1));
    if (to_number(s.substr(4, comma - 4), &g.line) && v.starts_with("x") && to_number(v.substr(1), &g.var)) return g;
  }
  throw ProofFileError("malformed justification '" + std::string(s) + "'", line_no);
}

}  // namespace

ProofObject parse_proof_file(std::string_view text) {
  ProofObject p;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto semi = line.rfind(';');
    if (semi == std::string_view::npos) throw ProofFileError("missing ';' before justification", line_no);
    try {
      p.lines.push_back(parse(line.substr(0, semi)));
    } catch (const ParseError& e) {
      throw ProofFileError(e.what(), line_no);
    }
    p.justs.push_back(parse_justification(line.substr(semi + 1), line_no));
  }
  if (p.lines.empty()) throw ProofFileError("proof has no lines", line_no);
  return p;
}

std::string format_proof_file(const ProofObject& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    out << print(p.lines[i]) << " ; " << to_string(p.justs[i]) << '\n';
  }
  return out.str();
}

std::optional<std::size_t> first_invalid_line(const Calculus& c, const ProofObject& p) {
  if (p.lines.empty() || p.lines.size() != p.justs.size()) return 1;
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    if (!c.justifies(p.justs[i], p.lines, i + 1)) return i + 1;
  }
  return std::nullopt;
}

std::optional<ProofObject> justify(const Calculus& c, std::vector<Formula> lines) {
  ProofObject p;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (auto id = c.is_axiom(lines[i])) {
      p.justs.push_back(AxiomInstance{*id});
    } else if (auto j = c.is_immediate_consequence(lines[i], std::span<const Formula>(lines).first(i))) {
      p.justs.push_back(*j);
    } else {
      return std::nullopt;
    }
  }
  p.lines = std::move(lines);
  return p;
}

}  // namespace arith
