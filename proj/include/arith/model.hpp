// Bounded evaluation of sentences in the standard model of arithmetic.

#ifndef ARITH_MODEL_HPP_
#define ARITH_MODEL_HPP_

#include <cstdint>
#include <string_view>

#include "arith/language.hpp"

namespace arith {

enum class Truth { True, False, Unknown };

std::string_view to_string(Truth t);

/// Evaluates a sentence with quantifiers ranging over 0..depth. A universal
/// claim with no counterexample in range is Unknown, not True; connectives
/// follow strong Kleene logic. Throws std::invalid_argument on open formulas.
Truth eval_closed(const Formula& f, std::uint64_t depth);

}  // namespace arith

#endif  // ARITH_MODEL_HPP_
