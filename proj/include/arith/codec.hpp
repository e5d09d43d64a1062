// Prime-exponent coding of symbols, formulas and proofs, with the
// number-level functions l (length), Gl (i-th element) and Neg.

#ifndef ARITH_CODEC_HPP_
#define ARITH_CODEC_HPP_

#include <cstdint>
#include <vector>

#include "arith/goedel_number.hpp"
#include "arith/language.hpp"

namespace arith::codec {

/// Symbol codes: 0->1, S->3, ~->5, |->7, all->9, (->11, )->13, =->15,
/// +->17, *->19, x_i -> 21+2i.
std::uint64_t symbol_code(const Symbol& s);
/// Throws DomainError for codes outside the table (even numbers, 0).
Symbol symbol_from_code(const GoedelNumber& code);

GoedelNumber encode_seq(const std::vector<GoedelNumber>& items);
GoedelNumber encode_seq(const std::vector<std::uint64_t>& items);
/// Throws DomainError ("not a sequence code") for 0, 1 and gapped support.
std::vector<GoedelNumber> decode_seq(const GoedelNumber& x);

/// l(x): number of items in the coded sequence.
std::size_t len_l(const GoedelNumber& x);
/// i Gl x: the i-th item (1-based). Throws DomainError when out of range.
GoedelNumber gl(std::size_t i, const GoedelNumber& x);
/// [l(x)] Gl x: the last item.
GoedelNumber last(const GoedelNumber& x);

GoedelNumber formula_code(const Formula& f);
/// Throws DomainError when x is not the code of a well-formed formula.
Formula decode_formula(const GoedelNumber& x);
bool is_formula_code(const GoedelNumber& x);

/// Neg(y) = code of ~(phi) for y = code of phi.
GoedelNumber neg_code(const GoedelNumber& y);

GoedelNumber proof_code(const std::vector<Formula>& lines);
/// Throws DomainError unless every item of x is a formula code.
std::vector<Formula> decode_proof(const GoedelNumber& x);

}  // namespace arith::codec

#endif  // ARITH_CODEC_HPP_
