#include "arith/language.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <optional>

namespace arith {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Term

struct Term::Node {
  Kind kind;
  VarIndex var = 0;
  std::optional<Term> a, b;
  std::size_t hash = 0;
  std::size_t nodes = 1;
  bool closed = true;
};

namespace {

template <class NodeT>
std::shared_ptr<NodeT> make_node() {
  return std::make_shared<NodeT>();
}

}  // namespace

Term Term::zero() {
  static const Term z = [] {
    auto n = make_node<Node>();
    n->kind = Kind::Zero;
    n->hash = mix(0, 1);
    return Term(n);
  }();
  return z;
}

Term Term::var(VarIndex index) {
  auto n = make_node<Node>();
  n->kind = Kind::Var;
  n->var = index;
  n->closed = false;
  n->hash = mix(mix(0, 2), std::hash<VarIndex>{}(index));
  return Term(n);
}

Term Term::succ(Term t) {
  auto n = make_node<Node>();
  n->kind = Kind::Succ;
  n->hash = mix(mix(0, 3), t.hash());
  n->nodes = 1 + t.node_count();
  n->closed = t.is_closed();
  n->a = std::move(t);
  return Term(n);
}

Term Term::add(Term t, Term u) {
  auto n = make_node<Node>();
  n->kind = Kind::Add;
  n->hash = mix(mix(mix(0, 4), t.hash()), u.hash());
  n->nodes = 1 + t.node_count() + u.node_count();
  n->closed = t.is_closed() && u.is_closed();
  n->a = std::move(t);
  n->b = std::move(u);
  return Term(n);
}

Term Term::mul(Term t, Term u) {
  auto n = make_node<Node>();
  n->kind = Kind::Mul;
  n->hash = mix(mix(mix(0, 5), t.hash()), u.hash());
  n->nodes = 1 + t.node_count() + u.node_count();
  n->closed = t.is_closed() && u.is_closed();
  n->a = std::move(t);
  n->b = std::move(u);
  return Term(n);
}

Term Term::numeral(std::uint64_t n) {
  Term t = zero();
  for (std::uint64_t i = 0; i < n; ++i) t = succ(t);
  return t;
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

VarIndex Term::var_index() const {
  if (node_->kind != Kind::Var) throw std::logic_error("Term::var_index on non-variable");
  return node_->var;
}

const Term& Term::lhs() const {
  if (!node_->a) throw std::logic_error("Term::lhs on leaf term");
  return *node_->a;
}

const Term& Term::rhs() const {
  if (!node_->b) throw std::logic_error("Term::rhs on non-binary term");
  return *node_->b;
}

bool Term::is_closed() const noexcept { return node_->closed; }
std::size_t Term::node_count() const noexcept { return node_->nodes; }
std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term& x, const Term& y) noexcept {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind || a.hash != b.hash || a.nodes != b.nodes) return false;
  switch (a.kind) {
    case Term::Kind::Zero: return true;
    case Term::Kind::Var: return a.var == b.var;
    case Term::Kind::Succ: return *a.a == *b.a;
    case Term::Kind::Add:
    case Term::Kind::Mul: return *a.a == *b.a && *a.b == *b.b;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Kind kind;
  VarIndex var = 0;
  std::optional<Term> t, u;
  std::optional<Formula> p, q;
  std::size_t hash = 0;
  std::size_t nodes = 1;
  std::size_t logical = 1;
};

Formula Formula::eq(Term t, Term u) {
  auto n = make_node<Node>();
  n->kind = Kind::Eq;
  n->hash = mix(mix(mix(17, 1), t.hash()), u.hash());
  n->nodes = 1 + t.node_count() + u.node_count();
  n->t = std::move(t);
  n->u = std::move(u);
  return Formula(n);
}

Formula Formula::negation(Formula p) {
  auto n = make_node<Node>();
  n->kind = Kind::Not;
  n->hash = mix(mix(17, 2), p.hash());
  n->nodes = 1 + p.node_count();
  n->logical = 1 + p.logical_size();
  n->p = std::move(p);
  return Formula(n);
}

Formula Formula::disj(Formula p, Formula q) {
  auto n = make_node<Node>();
  n->kind = Kind::Or;
  n->hash = mix(mix(mix(17, 3), p.hash()), q.hash());
  n->nodes = 1 + p.node_count() + q.node_count();
  n->logical = 1 + p.logical_size() + q.logical_size();
  n->p = std::move(p);
  n->q = std::move(q);
  return Formula(n);
}

Formula Formula::forall(VarIndex v, Formula p) {
  auto n = make_node<Node>();
  n->kind = Kind::Forall;
  n->var = v;
  n->hash = mix(mix(mix(17, 4), std::hash<VarIndex>{}(v)), p.hash());
  n->nodes = 1 + p.node_count();
  n->logical = 1 + p.logical_size();
  n->p = std::move(p);
  return Formula(n);
}

Formula Formula::implies(Formula p, Formula q) {
  return disj(negation(std::move(p)), std::move(q));
}

Formula Formula::conj(Formula p, Formula q) {
  return negation(disj(negation(std::move(p)), negation(std::move(q))));
}

Formula Formula::exists(VarIndex v, Formula p) {
  return negation(forall(v, negation(std::move(p))));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const Term& Formula::left_term() const {
  if (node_->kind != Kind::Eq) throw std::logic_error("Formula::left_term on non-atom");
  return *node_->t;
}

const Term& Formula::right_term() const {
  if (node_->kind != Kind::Eq) throw std::logic_error("Formula::right_term on non-atom");
  return *node_->u;
}

const Formula& Formula::body() const {
  if (!node_->p) throw std::logic_error("Formula::body on atom");
  return *node_->p;
}

const Formula& Formula::right() const {
  if (node_->kind != Kind::Or) throw std::logic_error("Formula::right on non-disjunction");
  return *node_->q;
}

VarIndex Formula::bound_var() const {
  if (node_->kind != Kind::Forall) throw std::logic_error("Formula::bound_var on non-quantifier");
  return node_->var;
}

bool Formula::as_implication(Formula* antecedent, Formula* consequent) const {
  if (node_->kind != Kind::Or || node_->p->kind() != Kind::Not) return false;
  if (antecedent) *antecedent = node_->p->body();
  if (consequent) *consequent = *node_->q;
  return true;
}

std::size_t Formula::node_count() const noexcept { return node_->nodes; }
std::size_t Formula::logical_size() const noexcept { return node_->logical; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

bool operator==(const Formula& x, const Formula& y) noexcept {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind || a.hash != b.hash || a.nodes != b.nodes) return false;
  switch (a.kind) {
    case Formula::Kind::Eq: return *a.t == *b.t && *a.u == *b.u;
    case Formula::Kind::Not: return *a.p == *b.p;
    case Formula::Kind::Or: return *a.p == *b.p && *a.q == *b.q;
    case Formula::Kind::Forall: return a.var == b.var && *a.p == *b.p;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Lexing and parsing

namespace {

enum class Tok : std::uint8_t {
  Zero, Succ, LParen, RParen, Plus, Times, Equals,
  Tilde, Bar, Arrow, Amp, All, Exists, Var, End
};

struct Token {
  Tok kind;
  VarIndex var = 0;
  std::size_t offset = 0;  // character offset; symbol index for coded input
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view w) { return s.substr(i, w.size()) == w; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (c == '0') { out.push_back({Tok::Zero, 0, at}); ++i; continue; }
    if (c == 'S') { out.push_back({Tok::Succ, 0, at}); ++i; continue; }
    if (c == '(') { out.push_back({Tok::LParen, 0, at}); ++i; continue; }
    if (c == ')') { out.push_back({Tok::RParen, 0, at}); ++i; continue; }
    if (c == '+') { out.push_back({Tok::Plus, 0, at}); ++i; continue; }
    if (c == '*') { out.push_back({Tok::Times, 0, at}); ++i; continue; }
    if (c == '=') { out.push_back({Tok::Equals, 0, at}); ++i; continue; }
    if (c == '~') { out.push_back({Tok::Tilde, 0, at}); ++i; continue; }
    if (c == '|') { out.push_back({Tok::Bar, 0, at}); ++i; continue; }
    if (c == '&') { out.push_back({Tok::Amp, 0, at}); ++i; continue; }
    if (starts("->")) { out.push_back({Tok::Arrow, 0, at}); i += 2; continue; }
    if (starts("all")) { out.push_back({Tok::All, 0, at}); i += 3; continue; }
    if (starts("exists")) { out.push_back({Tok::Exists, 0, at}); i += 6; continue; }
    if (c == 'x') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) throw ParseError("expected variable index after 'x'", j);
      if (s[i + 1] == '0' && j > i + 2) throw ParseError("leading zero in variable index", i + 1);
      VarIndex v = 0;
      auto [ptr, ec] = std::from_chars(s.data() + i + 1, s.data() + j, v);
      if (ec != std::errc()) throw ParseError("variable index out of range", i + 1);
      out.push_back({Tok::Var, v, at});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, 0, s.size()});
  return out;
}

// Backtracking recursive descent. Failures record the furthest token reached
// so that error positions point at the real problem.
class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula formula_all() {
    std::optional<Formula> f = formula();
    if (!f || peek() != Tok::End) {
      if (f) fail_here("trailing input");
      throw error();
    }
    return *f;
  }

  Term term_all() {
    std::optional<Term> t = term();
    if (!t || peek() != Tok::End) {
      if (t) fail_here("trailing input");
      throw error();
    }
    return *t;
  }

 private:
  Tok peek() const { return toks_[pos_].kind; }

  bool accept(Tok k) {
    if (peek() == k) {
      ++pos_;
      return true;
    }
    fail_here(expected_name(k));
    return false;
  }

  static const char* expected_name(Tok k) {
    switch (k) {
      case Tok::LParen: return "expected '('";
      case Tok::RParen: return "expected ')'";
      case Tok::Equals: return "expected '='";
      case Tok::Var: return "expected variable";
      default: return "unexpected token";
    }
  }

  void fail_here(const char* what) {
    if (pos_ >= furthest_) {
      furthest_ = pos_;
      message_ = what;
    }
  }

  ParseError error() const {
    const Token& t = toks_[std::min(furthest_, toks_.size() - 1)];
    std::string msg = message_.empty() ? "malformed input" : message_;
    if (t.kind == Tok::End) msg += " (unexpected end of input)";
    return ParseError(msg, t.offset);
  }

  std::optional<Term> term() {
    const std::size_t start = pos_;
    switch (peek()) {
      case Tok::Zero: ++pos_; return Term::zero();
      case Tok::Var: return Term::var(toks_[pos_++].var);
      case Tok::Succ: {
        ++pos_;
        if (!accept(Tok::LParen)) break;
        auto t = term();
        if (!t || !accept(Tok::RParen)) break;
        return Term::succ(*t);
      }
      case Tok::LParen: {
        ++pos_;
        auto t = term();
        if (!t) break;
        const Tok op = peek();
        if (op != Tok::Plus && op != Tok::Times) {
          fail_here("expected '+' or '*'");
          break;
        }
        ++pos_;
        auto u = term();
        if (!u || !accept(Tok::RParen)) break;
        return op == Tok::Plus ? Term::add(*t, *u) : Term::mul(*t, *u);
      }
      default: fail_here("expected term"); break;
    }
    pos_ = start;
    return std::nullopt;
  }

  std::optional<Formula> atom() {
    const std::size_t start = pos_;
    auto t = term();
    if (t && accept(Tok::Equals)) {
      if (auto u = term()) return Formula::eq(*t, *u);
    }
    pos_ = start;
    return std::nullopt;
  }

  std::optional<Formula> formula() {
    const std::size_t start = pos_;
    switch (peek()) {
      case Tok::Tilde: {
        ++pos_;
        if (!accept(Tok::LParen)) break;
        auto p = formula();
        if (!p || !accept(Tok::RParen)) break;
        return Formula::negation(*p);
      }
      case Tok::All:
      case Tok::Exists: {
        const bool universal = peek() == Tok::All;
        ++pos_;
        if (peek() != Tok::Var) {
          fail_here("expected variable");
          break;
        }
        const VarIndex v = toks_[pos_++].var;
        auto p = formula();
        if (!p) break;
        return universal ? Formula::forall(v, *p) : Formula::exists(v, *p);
      }
      default: {
        if (auto a = atom()) return a;
        if (peek() != Tok::LParen) {
          fail_here("expected formula");
          break;
        }
        ++pos_;
        auto p = formula();
        if (!p) break;
        const Tok op = peek();
        if (op == Tok::RParen) {
          ++pos_;
          return p;
        }
        if (op != Tok::Bar && op != Tok::Arrow && op != Tok::Amp) {
          fail_here("expected '|', '->', '&' or ')'");
          break;
        }
        ++pos_;
        auto q = formula();
        if (!q || !accept(Tok::RParen)) break;
        if (op == Tok::Bar) return Formula::disj(*p, *q);
        if (op == Tok::Arrow) return Formula::implies(*p, *q);
        return Formula::conj(*p, *q);
      }
    }
    pos_ = start;
    return std::nullopt;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t furthest_ = 0;
  std::string message_;
};

void print_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out += '0'; return;
    case Term::Kind::Var: out += 'x'; out += std::to_string(t.var_index()); return;
    case Term::Kind::Succ:
      out += "S(";
      print_into(t.lhs(), out);
      out += ')';
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out += '(';
      print_into(t.lhs(), out);
      out += t.kind() == Term::Kind::Add ? '+' : '*';
      print_into(t.rhs(), out);
      out += ')';
      return;
  }
}

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      print_into(f.left_term(), out);
      out += '=';
      print_into(f.right_term(), out);
      return;
    case Formula::Kind::Not:
      out += "~(";
      print_into(f.body(), out);
      out += ')';
      return;
    case Formula::Kind::Or:
      out += '(';
      print_into(f.body(), out);
      out += '|';
      print_into(f.right(), out);
      out += ')';
      return;
    case Formula::Kind::Forall:
      out += "all x";
      out += std::to_string(f.bound_var());
      out += " (";
      print_into(f.body(), out);
      out += ')';
      return;
  }
}

using SK = Symbol::Kind;

void symbols_into(const Term& t, std::vector<Symbol>& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: out.push_back({SK::Zero}); return;
    case Term::Kind::Var: out.push_back({SK::Var, t.var_index()}); return;
    case Term::Kind::Succ:
      out.push_back({SK::Succ});
      out.push_back({SK::LParen});
      symbols_into(t.lhs(), out);
      out.push_back({SK::RParen});
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out.push_back({SK::LParen});
      symbols_into(t.lhs(), out);
      out.push_back({t.kind() == Term::Kind::Add ? SK::Plus : SK::Times});
      symbols_into(t.rhs(), out);
      out.push_back({SK::RParen});
      return;
  }
}

void symbols_into(const Formula& f, std::vector<Symbol>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      symbols_into(f.left_term(), out);
      out.push_back({SK::Equals});
      symbols_into(f.right_term(), out);
      return;
    case Formula::Kind::Not:
      out.push_back({SK::Not});
      out.push_back({SK::LParen});
      symbols_into(f.body(), out);
      out.push_back({SK::RParen});
      return;
    case Formula::Kind::Or:
      out.push_back({SK::LParen});
      symbols_into(f.body(), out);
      out.push_back({SK::Or});
      symbols_into(f.right(), out);
      out.push_back({SK::RParen});
      return;
    case Formula::Kind::Forall:
      out.push_back({SK::All});
      out.push_back({SK::Var, f.bound_var()});
      out.push_back({SK::LParen});
      symbols_into(f.body(), out);
      out.push_back({SK::RParen});
      return;
  }
}

void collect_free(const Term& t, std::set<VarIndex>& out) {
  switch (t.kind()) {
    case Term::Kind::Zero: return;
    case Term::Kind::Var: out.insert(t.var_index()); return;
    case Term::Kind::Succ: collect_free(t.lhs(), out); return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collect_free(t.lhs(), out);
      collect_free(t.rhs(), out);
      return;
  }
}

void collect_free(const Formula& f, std::set<VarIndex>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      collect_free(f.left_term(), out);
      collect_free(f.right_term(), out);
      return;
    case Formula::Kind::Not: collect_free(f.body(), out); return;
    case Formula::Kind::Or:
      collect_free(f.body(), out);
      collect_free(f.right(), out);
      return;
    case Formula::Kind::Forall: {
      std::set<VarIndex> inner;
      collect_free(f.body(), inner);
      inner.erase(f.bound_var());
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

void collect_all(const Formula& f, std::set<VarIndex>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      collect_free(f.left_term(), out);
      collect_free(f.right_term(), out);
      return;
    case Formula::Kind::Not: collect_all(f.body(), out); return;
    case Formula::Kind::Or:
      collect_all(f.body(), out);
      collect_all(f.right(), out);
      return;
    case Formula::Kind::Forall:
      out.insert(f.bound_var());
      collect_all(f.body(), out);
      return;
  }
}

Term subst_term(const Term& t, VarIndex v, const Term& r) {
  switch (t.kind()) {
    case Term::Kind::Zero: return t;
    case Term::Kind::Var: return t.var_index() == v ? r : t;
    case Term::Kind::Succ: return Term::succ(subst_term(t.lhs(), v, r));
    case Term::Kind::Add: return Term::add(subst_term(t.lhs(), v, r), subst_term(t.rhs(), v, r));
    case Term::Kind::Mul: return Term::mul(subst_term(t.lhs(), v, r), subst_term(t.rhs(), v, r));
  }
  return t;
}

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).formula_all(); }

Term parse_term(std::string_view text) { return Parser(lex(text)).term_all(); }

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::string print(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::vector<Symbol> symbols(const Formula& f) {
  std::vector<Symbol> out;
  symbols_into(f, out);
  return out;
}

bool formula_from_symbols(const std::vector<Symbol>& syms, Formula* out) {
  std::vector<Token> toks;
  toks.reserve(syms.size() + 1);
  for (std::size_t i = 0; i < syms.size(); ++i) {
    Tok k = Tok::End;
    switch (syms[i].kind) {
      case SK::Zero: k = Tok::Zero; break;
      case SK::Succ: k = Tok::Succ; break;
      case SK::Not: k = Tok::Tilde; break;
      case SK::Or: k = Tok::Bar; break;
      case SK::All: k = Tok::All; break;
      case SK::LParen: k = Tok::LParen; break;
      case SK::RParen: k = Tok::RParen; break;
      case SK::Equals: k = Tok::Equals; break;
      case SK::Plus: k = Tok::Plus; break;
      case SK::Times: k = Tok::Times; break;
      case SK::Var: k = Tok::Var; break;
    }
    toks.push_back({k, syms[i].var, i});
  }
  toks.push_back({Tok::End, 0, syms.size()});
  try {
    Formula f = Parser(std::move(toks)).formula_all();
    // Only the canonical spelling codes a formula: no redundant parentheses,
    // no missing quantifier-body parentheses.
    if (symbols(f) != syms) return false;
    if (out) *out = f;
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

std::set<VarIndex> free_vars(const Formula& f) {
  std::set<VarIndex> out;
  collect_free(f, out);
  return out;
}

std::set<VarIndex> free_vars(const Term& t) {
  std::set<VarIndex> out;
  collect_free(t, out);
  return out;
}

std::set<VarIndex> all_vars(const Formula& f) {
  std::set<VarIndex> out;
  collect_all(f, out);
  return out;
}

Formula subst_closed(const Formula& f, VarIndex v, const Term& closed) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return Formula::eq(subst_term(f.left_term(), v, closed), subst_term(f.right_term(), v, closed));
    case Formula::Kind::Not: return Formula::negation(subst_closed(f.body(), v, closed));
    case Formula::Kind::Or:
      return Formula::disj(subst_closed(f.body(), v, closed), subst_closed(f.right(), v, closed));
    case Formula::Kind::Forall:
      if (f.bound_var() == v) return f;
      return Formula::forall(f.bound_var(), subst_closed(f.body(), v, closed));
  }
  return f;
}

Formula subst_numeral(const Formula& f, VarIndex v, std::uint64_t n) {
  if (!free_vars(f).contains(v)) {
    throw std::invalid_argument("subst_numeral: x" + std::to_string(v) + " is not free in " + print(f));
  }
  return subst_closed(f, v, Term::numeral(n));
}

Formula negate(const Formula& f) { return Formula::negation(f); }

}  // namespace arith
