#include "arith/model.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace arith {

namespace {

struct Binding {
  VarIndex var;
  std::uint64_t value;  // bounded by depth
};

class Evaluator {
 public:
  explicit Evaluator(std::uint64_t depth) : depth_(depth) {}

  Truth eval(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Eq: {
        std::uint64_t a = 0, b = 0;
        if (small(f.left_term(), &a) && small(f.right_term(), &b)) return a == b ? Truth::True : Truth::False;
        return big(f.left_term()) == big(f.right_term()) ? Truth::True : Truth::False;
      }
      case Formula::Kind::Not: {
        const Truth t = eval(f.body());
        return t == Truth::True ? Truth::False : t == Truth::False ? Truth::True : Truth::Unknown;
      }
      case Formula::Kind::Or: {
        const Truth a = eval(f.body());
        if (a == Truth::True) return a;
        const Truth b = eval(f.right());
        if (b == Truth::True) return b;
        return a == Truth::False && b == Truth::False ? Truth::False : Truth::Unknown;
      }
      case Formula::Kind::Forall: {
        if (vacuous(f)) {
          // Every value gives the same body; one evaluation decides the range.
          return eval(f.body()) == Truth::False ? Truth::False : Truth::Unknown;
        }
        env_.push_back({f.bound_var(), 0});
        for (std::uint64_t k = 0; k <= depth_; ++k) {
          env_.back().value = k;
          const Truth t = eval(f.body());
          if (t == Truth::False) {
            env_.pop_back();
            return Truth::False;
          }
        }
        env_.pop_back();
        // No counterexample in range; the claim itself stays unbounded.
        return Truth::Unknown;
      }
    }
    return Truth::Unknown;
  }

 private:
  bool vacuous(const Formula& f) {
    auto [it, fresh] = vacuous_.try_emplace(&f, false);
    if (fresh) it->second = !free_vars(f.body()).contains(f.bound_var());
    return it->second;
  }

  std::uint64_t lookup(VarIndex v) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (it->var == v) return it->value;
    }
    throw std::logic_error("unbound variable during evaluation");
  }

  // Machine-word evaluation; false on overflow.
  bool small(const Term& t, std::uint64_t* out) const {
    std::uint64_t a = 0, b = 0;
    switch (t.kind()) {
      case Term::Kind::Zero: *out = 0; return true;
      case Term::Kind::Var: *out = lookup(t.var_index()); return true;
      case Term::Kind::Succ: return small(t.lhs(), &a) && !__builtin_add_overflow(a, 1, out);
      case Term::Kind::Add:
        return small(t.lhs(), &a) && small(t.rhs(), &b) && !__builtin_add_overflow(a, b, out);
      case Term::Kind::Mul:
        return small(t.lhs(), &a) && small(t.rhs(), &b) && !__builtin_mul_overflow(a, b, out);
    }
    return false;
  }

  mpz_class big(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Zero: return 0;
      case Term::Kind::Var: return mpz_class(static_cast<unsigned long>(lookup(t.var_index())));
      case Term::Kind::Succ: return big(t.lhs()) + 1;
      case Term::Kind::Add: return big(t.lhs()) + big(t.rhs());
      case Term::Kind::Mul: return big(t.lhs()) * big(t.rhs());
    }
    return 0;
  }

  std::uint64_t depth_;
  std::vector<Binding> env_;
  std::unordered_map<const Formula*, bool> vacuous_;  // nodes live as long as the root
};

}  // namespace

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::True: return "True";
    case Truth::False: return "False";
    case Truth::Unknown: return "Unknown";
  }
  return "Unknown";
}

Truth eval_closed(const Formula& f, std::uint64_t depth) {
  if (!free_vars(f).empty()) throw std::invalid_argument("eval_closed: formula has free variables: " + print(f));
  return Evaluator(depth).eval(f);
}

}  // namespace arith
