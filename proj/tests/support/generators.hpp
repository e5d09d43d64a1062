// Exhaustive generators for terms and formulas, used by the property tests.

#ifndef ARITH_TESTS_GENERATORS_HPP_
#define ARITH_TESTS_GENERATORS_HPP_

#include <map>
#include <vector>

#include "arith/language.hpp"

namespace arith::testing {

/// All terms and formulas with exactly `size` nodes over the given variables.
class Enumerator {
 public:
  explicit Enumerator(std::vector<VarIndex> vars) : vars_(std::move(vars)) {}

  const std::vector<Term>& terms(std::size_t size) {
    if (auto it = terms_.find(size); it != terms_.end()) return it->second;
    std::vector<Term> out;
    if (size == 1) {
      out.push_back(Term::zero());
      for (VarIndex v : vars_) out.push_back(Term::var(v));
    } else if (size >= 2) {
      for (const Term& t : terms(size - 1)) out.push_back(Term::succ(t));
      for (std::size_t a = 1; a + 1 < size; ++a) {
        for (const Term& t : terms(a)) {
          for (const Term& u : terms(size - 1 - a)) {
            out.push_back(Term::add(t, u));
            out.push_back(Term::mul(t, u));
          }
        }
      }
    }
    return terms_[size] = std::move(out);
  }

  const std::vector<Formula>& formulas(std::size_t size) {
    if (auto it = formulas_.find(size); it != formulas_.end()) return it->second;
    std::vector<Formula> out;
    if (size >= 3) {
      for (std::size_t a = 1; a + 1 < size; ++a) {
        for (const Term& t : terms(a)) {
          for (const Term& u : terms(size - 1 - a)) out.push_back(Formula::eq(t, u));
        }
      }
      for (const Formula& p : formulas(size - 1)) {
        out.push_back(Formula::negation(p));
        for (VarIndex v : vars_) out.push_back(Formula::forall(v, p));
      }
      for (std::size_t a = 3; a + 4 <= size; ++a) {
        for (const Formula& p : formulas(a)) {
          for (const Formula& q : formulas(size - 1 - a)) out.push_back(Formula::disj(p, q));
        }
      }
    }
    return formulas_[size] = std::move(out);
  }

  /// Every formula with at most `max_size` nodes, smallest first.
  std::vector<Formula> formulas_up_to(std::size_t max_size) {
    std::vector<Formula> out;
    for (std::size_t s = 1; s <= max_size; ++s) {
      const auto& fs = formulas(s);
      out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
  }

 private:
  std::vector<VarIndex> vars_;
  std::map<std::size_t, std::vector<Term>> terms_;
  std::map<std::size_t, std::vector<Formula>> formulas_;
};

}  // namespace arith::testing

#endif  // ARITH_TESTS_GENERATORS_HPP_
