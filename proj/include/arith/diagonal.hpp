// The sequence of one-free-variable formulas in increasing code order,
// diagonal substitution, and bounded evidence for membership in K.

#ifndef ARITH_DIAGONAL_HPP_
#define ARITH_DIAGONAL_HPP_

#include <cstdint>

#include "arith/goedel_number.hpp"
#include "arith/language.hpp"
#include "arith/search.hpp"

namespace arith {

struct PhiIndex {
  std::uint64_t n;  // 1-based rank
  Formula formula;
  GoedelNumber code;
};

/// The n-th formula (by increasing Goedel number) with exactly one free
/// variable. Throws std::invalid_argument for n = 0.
PhiIndex phi(std::uint64_t n);

/// The first `count` entries of the sequence.
std::vector<PhiIndex> phi_prefix(std::uint64_t count);

/// Rank of a formula in the sequence. Throws std::invalid_argument unless it
/// has exactly one free variable, and DomainError if its code lies beyond
/// what the enumerator will scan (log2 of the code above kMaxIndexLog2).
std::uint64_t index_of(const Formula& f);
inline constexpr double kMaxIndexLog2 = 512.0;

/// phi(n) with its free variable replaced by the numeral n.
Formula diag_formula(std::uint64_t n);
/// Code of diag_formula(n).
GoedelNumber diag(std::uint64_t n);

struct KEvidence {
  enum class Kind { NotInK, InKSuggested, Unknown };
  Kind kind = Kind::Unknown;
  GoedelNumber witness;  // proof of diag(n) for NotInK, refutation for InKSuggested
  SearchBudget budget;
};

std::string_view to_string(KEvidence::Kind k);

/// Bounded decision of diag_formula(n). A refutation only suggests n in K:
/// concluding membership needs consistency.
KEvidence k_member_bounded(std::uint64_t n, const SearchBudget& b, unsigned workers = 1);

}  // namespace arith

#endif  // ARITH_DIAGONAL_HPP_
