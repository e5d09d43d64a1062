#include "arith/search.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "arith/codec.hpp"

namespace arith {

SearchBudget parse_budget(std::string_view text) {
  SearchBudget b;
  std::size_t* fields[] = {&b.max_lines, &b.max_formula_size, &b.pool_cap};
  std::size_t k = 0;
  while (k < 3) {
    const auto comma = text.find(',');
    const std::string_view part = text.substr(0, comma);
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), *fields[k]);
    if (ec != std::errc() || p != part.data() + part.size()) break;
    ++k;
    if (comma == std::string_view::npos) {
      text = {};
      break;
    }
    text.remove_prefix(comma + 1);
  }
  if (k != 3 || !text.empty()) throw std::invalid_argument("budget must be L,S,P");
  if (b.max_lines == 0 || b.max_formula_size == 0 || b.pool_cap == 0) {
    throw std::invalid_argument("budget fields must be positive");
  }
  return b;
}

std::string to_string(const SearchBudget& b) {
  return std::to_string(b.max_lines) + "," + std::to_string(b.max_formula_size) + "," + std::to_string(b.pool_cap);
}

std::string_view to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Provable: return "Provable";
    case Verdict::Kind::Refutable: return "Refutable";
    case Verdict::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

using FK = Formula::Kind;
using TK = Term::Kind;

void closed_subterms(const Term& t, std::vector<Term>& out) {
  if (t.is_closed()) out.push_back(t);
  if (t.kind() == TK::Succ) closed_subterms(t.lhs(), out);
  if (t.kind() == TK::Add || t.kind() == TK::Mul) {
    closed_subterms(t.lhs(), out);
    closed_subterms(t.rhs(), out);
  }
}

void closed_subterms(const Formula& f, std::vector<Term>& out) {
  switch (f.kind()) {
    case FK::Eq:
      closed_subterms(f.left_term(), out);
      closed_subterms(f.right_term(), out);
      return;
    case FK::Not:
    case FK::Forall: closed_subterms(f.body(), out); return;
    case FK::Or:
      closed_subterms(f.body(), out);
      closed_subterms(f.right(), out);
      return;
  }
}

void subformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  if (f.kind() == FK::Not || f.kind() == FK::Forall) subformulas(f.body(), out);
  if (f.kind() == FK::Or) {
    subformulas(f.body(), out);
    subformulas(f.right(), out);
  }
}

template <class T, class H>
void dedup(std::vector<T>& v) {
  std::unordered_set<T, H> seen;
  std::vector<T> out;
  for (auto& x : v) {
    if (seen.insert(x).second) out.push_back(x);
  }
  v = std::move(out);
}

// Replaces selected occurrences of a closed term by a variable. Occurrences
// under a binder of that variable are not eligible.
class Abstractor {
 public:
  Abstractor(const Term& t, VarIndex v) : t_(t), v_(v) {}

  std::size_t count(const Formula& f) {
    counting_ = true;
    next_ = 0;
    walk(f, false);
    return next_;
  }

  Formula apply(const Formula& f, std::uint64_t mask) {
    counting_ = false;
    next_ = 0;
    mask_ = mask;
    return walk(f, false);
  }

 private:
  Term walk(const Term& u, bool shadowed) {
    if (!shadowed && u == t_) {
      const std::size_t k = next_++;
      if (!counting_ && ((mask_ >> k) & 1u)) return Term::var(v_);
      return u;
    }
    switch (u.kind()) {
      case TK::Zero:
      case TK::Var: return u;
      case TK::Succ: return counting_ ? (walk(u.lhs(), shadowed), u) : Term::succ(walk(u.lhs(), shadowed));
      case TK::Add:
      case TK::Mul: {
        Term a = walk(u.lhs(), shadowed);
        Term b = walk(u.rhs(), shadowed);
        if (counting_) return u;
        return u.kind() == TK::Add ? Term::add(a, b) : Term::mul(a, b);
      }
    }
    return u;
  }

  Formula walk(const Formula& f, bool shadowed) {
    switch (f.kind()) {
      case FK::Eq: {
        Term a = walk(f.left_term(), shadowed);
        Term b = walk(f.right_term(), shadowed);
        return counting_ ? f : Formula::eq(a, b);
      }
      case FK::Not: {
        Formula p = walk(f.body(), shadowed);
        return counting_ ? f : Formula::negation(p);
      }
      case FK::Or: {
        Formula p = walk(f.body(), shadowed);
        Formula q = walk(f.right(), shadowed);
        return counting_ ? f : Formula::disj(p, q);
      }
      case FK::Forall: {
        Formula p = walk(f.body(), shadowed || f.bound_var() == v_);
        return counting_ ? f : Formula::forall(f.bound_var(), p);
      }
    }
    return f;
  }

  Term t_;
  VarIndex v_;
  bool counting_ = true;
  std::size_t next_ = 0;
  std::uint64_t mask_ = 0;
};

constexpr std::size_t kMaxAbstractedOccurrences = 10;

struct Context {
  const Calculus* calculus;
  SearchBudget budget;
  Formula target;
  std::vector<Term> pool;
  std::vector<VarIndex> vars;
  std::vector<Formula> formula_pool;
};

struct Option {
  enum class Kind { Axiom, Gen, MP } kind;
  std::optional<Formula> minor;  // Gen premise or MP minor
  std::optional<Formula> major;  // MP only
};

class Searcher {
 public:
  explicit Searcher(const Context& ctx) : ctx_(ctx) { add_node(ctx.target); }

  std::vector<Option> options_for(std::size_t u) const {
    const Formula& g = nodes_[u].f;
    if (ctx_.calculus->is_axiom(g)) return {Option{Option::Kind::Axiom, {}, {}}};
    std::vector<Option> out;
    if (g.kind() == FK::Forall) out.push_back({Option::Kind::Gen, g.body(), {}});

    std::vector<Formula> minors = forced_minors(g);
    for (const auto& n : nodes_) {
      if (!(n.f == g)) minors.push_back(n.f);
    }
    minors.insert(minors.end(), ctx_.formula_pool.begin(), ctx_.formula_pool.end());
    dedup<Formula, FormulaHash>(minors);
    for (const Formula& psi : minors) {
      if (psi.logical_size() > ctx_.budget.max_formula_size) continue;
      Formula m = Formula::implies(psi, g);
      if (m.logical_size() > ctx_.budget.max_formula_size) continue;
      out.push_back({Option::Kind::MP, psi, m});
    }
    return out;
  }

  void run_root(const Option& opt) { try_option(0, opt); }

  void run() {
    for (const Option& opt : options_for(0)) try_option(0, opt);
  }

  const std::optional<std::vector<Formula>>& best() const { return best_lines_; }
  const GoedelNumber& best_code() const { return best_code_; }

 private:
  struct Node {
    Formula f;
    Option::Kind kind = Option::Kind::Axiom;
    bool justified = false;
    std::size_t a = 0, b = 0;
  };

  std::vector<Formula> forced_minors(const Formula& g) const {
    std::vector<Formula> out;
    auto consider = [&](const Formula& psi) {
      if (ctx_.calculus->is_axiom(Formula::implies(psi, g))) out.push_back(psi);
    };
    Formula p = g, q = g;
    // L1: g = q -> p gives psi = p.
    if (g.as_implication(&q, &p)) consider(p);
    // L2: g = (p -> q) -> (p -> r) gives psi = p -> (q -> r).
    {
      Formula pq = g, pr = g, p1 = g, q1 = g, p2 = g, r2 = g;
      if (g.as_implication(&pq, &pr) && pq.as_implication(&p1, &q1) && pr.as_implication(&p2, &r2) && p1 == p2) {
        consider(Formula::implies(p1, Formula::implies(q1, r2)));
      }
    }
    // L3: g = p -> q gives psi = ~q -> ~p.
    if (g.as_implication(&p, &q)) consider(Formula::implies(Formula::negation(q), Formula::negation(p)));
    // Q2: g = p -> all v q gives psi = all v (p -> q).
    if (g.as_implication(&p, &q) && q.kind() == FK::Forall) {
      consider(Formula::forall(q.bound_var(), Formula::implies(p, q.body())));
    }
    // Equality schemas: the antecedent is x_i = x_j.
    if (g.kind() == FK::Eq) {
      const Term& l = g.left_term();
      const Term& r = g.right_term();
      if (l.kind() == r.kind() && l.kind() == TK::Succ) consider(Formula::eq(l.lhs(), r.lhs()));
      if (l.kind() == r.kind() && (l.kind() == TK::Add || l.kind() == TK::Mul)) {
        consider(Formula::eq(l.lhs(), r.lhs()));
        consider(Formula::eq(l.rhs(), r.rhs()));
      }
    }
    if (g.as_implication(&p, &q) && p.kind() == FK::Eq && q.kind() == FK::Eq) {
      consider(Formula::eq(p.left_term(), q.left_term()));
    }
    // Closed axioms of the form X -> g.
    for (const auto& a : ctx_.calculus->arithmetic_axioms()) {
      Formula x = g, c = g;
      if (a.formula.as_implication(&x, &c) && c == g) out.push_back(x);
    }
    // Q1: g = chi[v := t] gives psi = all v chi.
    const auto fv = free_vars(g);
    for (VarIndex v : ctx_.vars) {
      if (fv.contains(v)) continue;
      for (const Term& t : ctx_.pool) {
        Abstractor abs(t, v);
        const std::size_t occ = abs.count(g);
        std::vector<std::uint64_t> masks;
        if (occ <= kMaxAbstractedOccurrences) {
          for (std::uint64_t m = 0; m < (std::uint64_t{1} << occ); ++m) masks.push_back(m);
        } else {
          masks = {0, (std::uint64_t{1} << kMaxAbstractedOccurrences) - 1};
        }
        for (std::uint64_t m : masks) out.push_back(Formula::forall(v, abs.apply(g, m)));
      }
    }
    dedup<Formula, FormulaHash>(out);
    return out;
  }

  std::size_t add_node(const Formula& f) {
    index_.emplace(f, nodes_.size());
    nodes_.push_back(Node{f});
    return nodes_.size() - 1;
  }

  void pop_node() {
    index_.erase(nodes_.back().f);
    nodes_.pop_back();
  }

  bool reaches(std::size_t from, std::size_t to) const {
    if (from == to) return true;
    const Node& n = nodes_[from];
    if (!n.justified || n.kind == Option::Kind::Axiom) return false;
    if (reaches(n.a, to)) return true;
    return n.kind == Option::Kind::MP && reaches(n.b, to);
  }

  // Finds or creates the node for f; returns false when that is impossible
  // (no room, or the edge u -> node would close a cycle).
  bool attach(const Formula& f, std::size_t u, std::size_t* idx) {
    if (auto it = index_.find(f); it != index_.end()) {
      if (reaches(it->second, u)) return false;
      *idx = it->second;
      return true;
    }
    if (nodes_.size() >= ctx_.budget.max_lines || f.logical_size() > ctx_.budget.max_formula_size) return false;
    *idx = add_node(f);
    return true;
  }

  void try_option(std::size_t u, const Option& opt) {
    const std::size_t before = nodes_.size();
    bool ok = true;
    std::size_t a = 0, b = 0;
    if (opt.kind == Option::Kind::Gen) {
      ok = attach(*opt.minor, u, &a);
    } else if (opt.kind == Option::Kind::MP) {
      ok = attach(*opt.minor, u, &a) && attach(*opt.major, u, &b);
    }
    if (ok) {
      Node& node = nodes_[u];
      node.justified = true;
      node.kind = opt.kind;
      node.a = a;
      node.b = b;
      step();
      nodes_[u].justified = false;
    }
    while (nodes_.size() > before) pop_node();
  }

  void step() {
    std::size_t u = 0;
    while (u < nodes_.size() && nodes_[u].justified) ++u;
    if (u == nodes_.size()) {
      complete();
      return;
    }
    for (const Option& opt : options_for(u)) try_option(u, opt);
  }

  const GoedelNumber& code_of(const Formula& f) {
    auto it = codes_.find(f);
    if (it == codes_.end()) it = codes_.emplace(f, codec::formula_code(f)).first;
    return it->second;
  }

  // All topological orders with the target last; keeps the least code.
  void complete() {
    const std::size_t n = nodes_.size();
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    auto ready = [&](std::size_t i) {
      const Node& x = nodes_[i];
      if (x.kind == Option::Kind::Axiom) return true;
      if (!placed[x.a]) return false;
      return x.kind != Option::Kind::MP || placed[x.b];
    };
    auto rec = [&](auto&& self) -> void {
      if (order.size() == n - 1) {
        order.push_back(0);
        consider(order);
        order.pop_back();
        return;
      }
      for (std::size_t i = 1; i < n; ++i) {
        if (placed[i] || !ready(i)) continue;
        placed[i] = true;
        order.push_back(i);
        self(self);
        order.pop_back();
        placed[i] = false;
      }
    };
    rec(rec);
  }

  void consider(const std::vector<std::size_t>& order) {
    std::vector<GoedelNumber> codes;
    codes.reserve(order.size());
    for (std::size_t i : order) codes.push_back(code_of(nodes_[i].f));
    GoedelNumber code = GoedelNumber::sequence(std::move(codes));
    if (best_lines_ && !(code < best_code_)) return;
    std::vector<Formula> lines;
    for (std::size_t i : order) lines.push_back(nodes_[i].f);
    best_lines_ = std::move(lines);
    best_code_ = std::move(code);
  }

  const Context& ctx_;
  std::vector<Node> nodes_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
  std::unordered_map<Formula, GoedelNumber, FormulaHash> codes_;
  std::optional<std::vector<Formula>> best_lines_;
  GoedelNumber best_code_;
};

}  // namespace

ProofSearch::ProofSearch(const Calculus& calculus, SearchBudget budget, unsigned workers)
    : calculus_(calculus), budget_(budget), workers_(std::max(1u, workers)) {
  if (budget.max_lines == 0 || budget.max_formula_size == 0 || budget.pool_cap == 0) {
    throw std::invalid_argument("budget fields must be positive");
  }
}

std::vector<Term> ProofSearch::term_pool(const Formula& target) const {
  std::vector<Term> pool;
  closed_subterms(target, pool);
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Term& a, const Term& b) { return a.node_count() > b.node_count(); });
  for (std::uint64_t k = 0; pool.size() < budget_.pool_cap + 8 && k < budget_.pool_cap; ++k) {
    pool.push_back(Term::numeral(k));
  }
  dedup<Term, TermHash>(pool);
  if (pool.size() > budget_.pool_cap) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(budget_.pool_cap), pool.end());
  return pool;
}

std::optional<ProofObject> ProofSearch::least_proof(const Formula& target) const {
  if (target.logical_size() > budget_.max_formula_size) return std::nullopt;
  Context ctx{&calculus_, budget_, target, term_pool(target), {}, {}};
  auto vars = all_vars(target);
  vars.insert({0, 1});
  ctx.vars.assign(vars.begin(), vars.end());
  subformulas(target, ctx.formula_pool);
  subformulas(negate(target), ctx.formula_pool);
  for (const auto& a : calculus_.arithmetic_axioms()) subformulas(a.formula, ctx.formula_pool);
  dedup<Formula, FormulaHash>(ctx.formula_pool);

  std::optional<std::vector<Formula>> best;
  GoedelNumber best_code;
  auto take = [&](const Searcher& s) {
    if (s.best() && (!best || s.best_code() < best_code)) {
      best = s.best();
      best_code = s.best_code();
    }
  };

  if (workers_ == 1) {
    Searcher s(ctx);
    s.run();
    take(s);
  } else {
    const std::vector<Option> roots = Searcher(ctx).options_for(0);
    std::vector<std::future<Searcher>> jobs;
    for (unsigned w = 0; w < workers_; ++w) {
      jobs.push_back(std::async(std::launch::async, [&ctx, &roots, w, this] {
        Searcher s(ctx);
        for (std::size_t i = w; i < roots.size(); i += workers_) s.run_root(roots[i]);
        return s;
      }));
    }
    for (auto& j : jobs) take(j.get());
  }
  if (!best) return std::nullopt;
  auto proof = justify(calculus_, *best);
  if (!proof) throw std::logic_error("proof search produced an invalid proof");
  return proof;
}

Verdict ProofSearch::decide(const Formula& f) const {
  Verdict v;
  v.budget = budget_;
  if (auto p = least_proof(f)) {
    v.kind = Verdict::Kind::Provable;
    v.witness = p->code();
    v.proof = std::move(p);
    return v;
  }
  if (auto p = least_proof(negate(f))) {
    v.kind = Verdict::Kind::Refutable;
    v.witness = p->code();
    v.proof = std::move(p);
    return v;
  }
  return v;
}

Verdict decide_bounded(const Formula& f, const SearchBudget& b, const Calculus& c, unsigned workers) {
  return ProofSearch(c, b, workers).decide(f);
}

}  // namespace arith
