// Arbitrary-precision naturals for Goedel codes.
//
// Proof codes are towers like 2^(2^21*3^15*5^21) that no machine can hold in
// positional form. A GoedelNumber is therefore kept in one of two canonical
// representations:
//
//   explicit  - a GMP integer, used whenever the value has at most
//               kExplicitBitLimit bits;
//   sequence  - the exponent list (e1, ..., ek) of 2^e1 * 3^e2 * ... * pk^ek,
//               used only when the value is larger than that.
//
// Because the choice depends only on the value, two GoedelNumbers are equal
// exactly when their representations are equal. Ordering between large
// sequence values is decided on logarithms with certified interval bounds.

#ifndef ARITH_GOEDEL_NUMBER_HPP_
#define ARITH_GOEDEL_NUMBER_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arith {

/// Raised when a number does not have the shape an operation requires
/// (not a sequence code, not a formula code, index out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Render { Decimal, Factored };

class GoedelNumber {
 public:
  static constexpr std::size_t kExplicitBitLimit = 1u << 16;

  GoedelNumber();  // zero
  GoedelNumber(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit GoedelNumber(mpz_class v);

  /// 2^e1 * 3^e2 * ... ; every exponent must be >= 1, the list nonempty.
  static GoedelNumber sequence(std::vector<GoedelNumber> exponents);

  bool is_explicit() const noexcept { return !seq_; }
  /// The positional value. Throws DomainError for sequence representation.
  const mpz_class& value() const;

  bool is_zero() const noexcept;
  /// Fits in 64 bits; returns nullopt otherwise.
  std::optional<std::uint64_t> to_u64() const;

  /// The exponent list if this is a sequence code (support an initial
  /// segment of the primes, all exponents >= 1); nullopt otherwise.
  std::optional<std::vector<GoedelNumber>> sequence_exponents() const;

  /// log2 of the value, rounded; +inf for numbers whose logarithm does not
  /// fit a double. Only for display and pruning, never for decisions.
  double approx_log2() const;

  std::string to_string(Render mode = Render::Decimal) const;

  /// Accepts decimal literals and products of powers such as
  /// "2^143489070" or "2^(2^21*3^15*5^21)*3^7" ('·' or '*' as product).
  static GoedelNumber parse(std::string_view text);

  friend bool operator==(const GoedelNumber& a, const GoedelNumber& b);
  friend std::strong_ordering operator<=>(const GoedelNumber& a, const GoedelNumber& b);

  std::size_t hash() const noexcept;

 private:
  mpz_class value_;
  std::shared_ptr<const std::vector<GoedelNumber>> seq_;
};

struct GoedelNumberHash {
  std::size_t operator()(const GoedelNumber& g) const noexcept { return g.hash(); }
};

/// The i-th prime, 1-based (prime(1) == 2).
std::uint64_t prime(std::size_t i);

}  // namespace arith

#endif  // ARITH_GOEDEL_NUMBER_HPP_
