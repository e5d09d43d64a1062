#include "arith/universe.hpp"

#include <unordered_set>

namespace arith {

namespace {

using FK = Formula::Kind;
using TK = Term::Kind;

class Collector {
 public:
  void add(const Formula& f) {
    if (seen_.insert(f).second) items_.push_back(f);
  }
  std::vector<Formula> take() { return std::move(items_); }

 private:
  std::unordered_set<Formula, FormulaHash> seen_;
  std::vector<Formula> items_;
};

Formula veq(VarIndex i, VarIndex j) { return Formula::eq(Term::var(i), Term::var(j)); }

Term swap_vars(const Term& t) {
  switch (t.kind()) {
    case TK::Zero: return t;
    case TK::Var:
      if (t.var_index() == 0) return Term::var(1);
      if (t.var_index() == 1) return Term::var(0);
      return t;
    case TK::Succ: return Term::succ(swap_vars(t.lhs()));
    case TK::Add: return Term::add(swap_vars(t.lhs()), swap_vars(t.rhs()));
    case TK::Mul: return Term::mul(swap_vars(t.lhs()), swap_vars(t.rhs()));
  }
  return t;
}

Formula swap_vars(const Formula& f) {
  switch (f.kind()) {
    case FK::Eq: return Formula::eq(swap_vars(f.left_term()), swap_vars(f.right_term()));
    case FK::Not: return Formula::negation(swap_vars(f.body()));
    case FK::Or: return Formula::disj(swap_vars(f.body()), swap_vars(f.right()));
    case FK::Forall: {
      const VarIndex v = f.bound_var();
      return Formula::forall(v == 0 ? 1 : v == 1 ? 0 : v, swap_vars(f.body()));
    }
  }
  return f;
}

// Rewrites the leftmost atom; nullopt when the rewrite changes nothing.
template <class Fn>
std::optional<Formula> at_first_atom(const Formula& f, Fn&& fn) {
  switch (f.kind()) {
    case FK::Eq: return fn(f);
    case FK::Not:
      if (auto b = at_first_atom(f.body(), fn)) return Formula::negation(*b);
      return std::nullopt;
    case FK::Or:
      if (auto b = at_first_atom(f.body(), fn)) return Formula::disj(*b, f.right());
      return std::nullopt;
    case FK::Forall:
      if (auto b = at_first_atom(f.body(), fn)) return Formula::forall(f.bound_var(), *b);
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Term> bump_first_zero(const Term& t) {
  switch (t.kind()) {
    case TK::Zero: return Term::succ(t);
    case TK::Var: return std::nullopt;
    case TK::Succ:
      if (auto u = bump_first_zero(t.lhs())) return Term::succ(*u);
      return std::nullopt;
    case TK::Add:
    case TK::Mul: {
      auto rebuild = [&](const Term& a, const Term& b) {
        return t.kind() == TK::Add ? Term::add(a, b) : Term::mul(a, b);
      };
      if (auto u = bump_first_zero(t.lhs())) return rebuild(*u, t.rhs());
      if (auto u = bump_first_zero(t.rhs())) return rebuild(t.lhs(), *u);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Formula> axiom_instances(const Calculus& c, const UniverseOptions& opt) {
  Collector out;
  std::vector<Formula> universals;
  for (const auto& a : c.arithmetic_axioms()) {
    out.add(a.formula);
    if (a.formula.kind() == FK::Forall) universals.push_back(a.formula);
  }
  const auto& V = opt.vars;
  for (VarIndex i : V) out.add(veq(i, i));
  for (VarIndex i : V) {
    for (VarIndex j : V) {
      const Formula ij = veq(i, j);
      out.add(Formula::implies(ij, Formula::eq(Term::succ(Term::var(i)), Term::succ(Term::var(j)))));
      for (VarIndex k : V) {
        const Term xi = Term::var(i), xj = Term::var(j), xk = Term::var(k);
        out.add(Formula::implies(ij, Formula::implies(veq(i, k), veq(j, k))));
        out.add(Formula::implies(ij, Formula::eq(Term::add(xi, xk), Term::add(xj, xk))));
        out.add(Formula::implies(ij, Formula::eq(Term::add(xk, xi), Term::add(xk, xj))));
        out.add(Formula::implies(ij, Formula::eq(Term::mul(xi, xk), Term::mul(xj, xk))));
        out.add(Formula::implies(ij, Formula::eq(Term::mul(xk, xi), Term::mul(xk, xj))));
      }
    }
  }
  for (VarIndex v : V) universals.push_back(Formula::forall(v, veq(v, v)));
  // Instantiate universals, then the closed universals those produce.
  for (std::size_t n = 0; n < universals.size(); ++n) {
    const Formula u = universals[n];
    for (const Term& t : opt.terms) {
      const Formula inst = subst_closed(u.body(), u.bound_var(), t);
      out.add(Formula::implies(u, inst));
      if (inst.kind() == FK::Forall && free_vars(inst).empty() && n < c.arithmetic_axioms().size()) {
        universals.push_back(inst);
      }
    }
  }
  // A few propositional instances over small closed formulas.
  const Formula a1 = c.arithmetic_axioms().front().formula;
  const std::vector<Formula> small = {veq(0, 0), a1, Formula::eq(Term::numeral(1), Term::zero())};
  for (const auto& p : small) {
    for (const auto& q : small) {
      out.add(Formula::implies(p, Formula::implies(q, p)));
      out.add(Formula::implies(Formula::implies(Formula::negation(q), Formula::negation(p)),
                               Formula::implies(p, q)));
    }
  }
  auto items = out.take();
  std::vector<Formula> valid;
  for (auto& f : items) {
    if (c.is_axiom(f)) valid.push_back(std::move(f));
  }
  return valid;
}

std::vector<ProofObject> proof_universe(const Calculus& c, const UniverseOptions& opt) {
  const auto ax = axiom_instances(c, opt);
  std::vector<ProofObject> out;
  auto emit = [&](std::vector<Formula> lines) {
    if (out.size() >= opt.cap) return;
    auto p = justify(c, std::move(lines));
    if (p) out.push_back(std::move(*p));
  };
  for (const auto& a : ax) emit({a});
  for (const auto& a : ax) {
    for (VarIndex v : opt.vars) {
      const Formula g = Formula::forall(v, a);
      if (c.is_axiom(g)) continue;
      emit({a, g});
      for (VarIndex w : opt.vars) {
        const Formula gg = Formula::forall(w, g);
        if (!c.is_axiom(gg)) emit({a, g, gg});
      }
    }
  }
  std::unordered_set<Formula, FormulaHash> axiom_set(ax.begin(), ax.end());
  for (const auto& major : ax) {
    Formula p = major, q = major;
    if (!major.as_implication(&p, &q) || !axiom_set.contains(p) || axiom_set.contains(q)) continue;
    emit({p, major, q});
    emit({major, p, q});
  }
  return out;
}

std::vector<Formula> line_mutations(const Formula& f) {
  Collector out;
  out.add(Formula::negation(f));
  if (f.kind() == FK::Not) out.add(f.body());
  if (f.kind() == FK::Or) out.add(Formula::disj(f.right(), f.body()));
  if (auto m = at_first_atom(f, [](const Formula& a) -> std::optional<Formula> {
        return Formula::eq(Term::succ(a.left_term()), a.right_term());
      })) {
    out.add(*m);
  }
  out.add(swap_vars(f));
  if (auto m = at_first_atom(f, [](const Formula& a) -> std::optional<Formula> {
        if (auto l = bump_first_zero(a.left_term())) return Formula::eq(*l, a.right_term());
        if (auto r = bump_first_zero(a.right_term())) return Formula::eq(a.left_term(), *r);
        return std::nullopt;
      })) {
    out.add(*m);
  }
  out.add(Formula::eq(Term::numeral(1), Term::zero()));
  std::vector<Formula> result;
  for (auto& m : out.take()) {
    if (!(m == f)) result.push_back(std::move(m));
  }
  return result;
}

std::vector<Mutant> invalidating_mutants(const Calculus& c, const std::vector<Formula>& proof) {
  std::vector<Mutant> out;
  for (std::size_t i = 0; i < proof.size(); ++i) {
    for (auto& m : line_mutations(proof[i])) {
      if (c.is_axiom(m)) continue;
      std::vector<Formula> lines = proof;
      lines[i] = std::move(m);
      if (c.is_immediate_consequence(lines[i], std::span<const Formula>(lines).first(i))) continue;
      out.push_back({std::move(lines), i + 1});
    }
  }
  return out;
}

}  // namespace arith
