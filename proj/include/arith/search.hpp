// Bounded proof search: the finite surrogates for Bew and Wid.

#ifndef ARITH_SEARCH_HPP_
#define ARITH_SEARCH_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arith/calculus.hpp"
#include "arith/goedel_number.hpp"
#include "arith/language.hpp"

namespace arith {

struct SearchBudget {
  std::size_t max_lines = 4;
  std::size_t max_formula_size = 12;  // logical size: count of =, ~, |, all
  std::size_t pool_cap = 4;           // closed terms available for instantiation

  friend bool operator==(const SearchBudget&, const SearchBudget&) = default;
};

/// "L,S,P". Throws std::invalid_argument unless all three are positive.
SearchBudget parse_budget(std::string_view text);
std::string to_string(const SearchBudget& b);

struct Verdict {
  enum class Kind { Provable, Refutable, Unknown };
  Kind kind = Kind::Unknown;
  GoedelNumber witness;               // meaningful unless Unknown
  std::optional<ProofObject> proof;   // the witness, justified
  SearchBudget budget;
};

std::string_view to_string(Verdict::Kind k);

/// Enumerates tight proofs (every line an ancestor of the last, no repeated
/// lines) of a target within a budget and returns the one with the least
/// Goedel number. Lines are limited to max_formula_size; quantifier
/// instantiation uses a pool of pool_cap closed terms (the closed subterms of
/// the target, largest first, then 0, S(0), ...); modus ponens minor premises
/// come from the major premise's schema, from lines already present, or from
/// the subformulas of the target, its negation and the arithmetic axioms.
class ProofSearch {
 public:
  ProofSearch(const Calculus& calculus, SearchBudget budget, unsigned workers = 1);

  std::optional<ProofObject> least_proof(const Formula& target) const;
  /// Provable if the target has a proof in budget, else Refutable if its
  /// negation has one, else Unknown.
  Verdict decide(const Formula& f) const;

  const SearchBudget& budget() const noexcept { return budget_; }

  /// The closed-term pool used for a target.
  std::vector<Term> term_pool(const Formula& target) const;

 private:
  const Calculus& calculus_;
  SearchBudget budget_;
  unsigned workers_;
};

Verdict decide_bounded(const Formula& f, const SearchBudget& b, const Calculus& c = Calculus::standard(),
                       unsigned workers = 1);

}  // namespace arith

#endif  // ARITH_SEARCH_HPP_
