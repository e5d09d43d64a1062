// First-order arithmetic language: terms over 0, S, +, * and formulas over
// =, ~, |, all. Values are immutable trees with shared structure.

#ifndef ARITH_LANGUAGE_HPP_
#define ARITH_LANGUAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arith {

using VarIndex = std::uint64_t;

class Term {
 public:
  enum class Kind : std::uint8_t { Zero, Var, Succ, Add, Mul };

  static Term zero();
  static Term var(VarIndex index);
  static Term succ(Term t);
  static Term add(Term t, Term u);
  static Term mul(Term t, Term u);
  /// The numeral S^n(0).
  static Term numeral(std::uint64_t n);

  Kind kind() const noexcept;
  VarIndex var_index() const;  // Var only
  const Term& lhs() const;     // Succ, Add, Mul
  const Term& rhs() const;     // Add, Mul

  bool is_closed() const noexcept;
  std::size_t node_count() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { Eq, Not, Or, Forall };

  static Formula eq(Term t, Term u);
  static Formula negation(Formula p);
  static Formula disj(Formula p, Formula q);
  static Formula forall(VarIndex v, Formula p);

  // Surface sugar, expanded into the core connectives.
  static Formula implies(Formula p, Formula q);  // (~(p) | q)
  static Formula conj(Formula p, Formula q);     // ~((~(p) | ~(q)))
  static Formula exists(VarIndex v, Formula p);  // ~(all v ~(p))

  Kind kind() const noexcept;
  const Term& left_term() const;   // Eq
  const Term& right_term() const;  // Eq
  const Formula& body() const;     // Not, Forall; left disjunct for Or
  const Formula& right() const;    // Or
  VarIndex bound_var() const;      // Forall

  /// If this is (p -> q), i.e. (~(p) | q), returns true and fills p, q.
  bool as_implication(Formula* antecedent, Formula* consequent) const;

  /// Number of tree nodes, terms included.
  std::size_t node_count() const noexcept;
  /// Number of formula-level nodes (=, ~, |, all); terms are not counted.
  std::size_t logical_size() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};
struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

/// Symbols of the coded alphabet. `var` is meaningful only for Var.
struct Symbol {
  enum class Kind : std::uint8_t {
    Zero, Succ, Not, Or, All, LParen, RParen, Equals, Plus, Times, Var
  };
  Kind kind;
  VarIndex var = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses the canonical syntax plus sugar (->, &, exists) and redundant
/// parentheses. Throws ParseError.
Formula parse(std::string_view text);
Term parse_term(std::string_view text);

std::string print(const Formula& f);
std::string print(const Term& t);

/// The canonical symbol string of a formula (what print() spells out).
std::vector<Symbol> symbols(const Formula& f);
/// Inverse of symbols(): accepts only canonical symbol strings.
/// Returns false when the string is not the symbol string of a formula.
bool formula_from_symbols(const std::vector<Symbol>& syms, Formula* out);

std::set<VarIndex> free_vars(const Formula& f);
std::set<VarIndex> free_vars(const Term& t);
/// Every variable index occurring anywhere, bound or free.
std::set<VarIndex> all_vars(const Formula& f);

/// Replaces the free occurrences of v by the numeral S^n(0).
/// Throws std::invalid_argument when v is not free in f.
Formula subst_numeral(const Formula& f, VarIndex v, std::uint64_t n);
/// Replaces the free occurrences of v by a closed term. No precondition on v.
Formula subst_closed(const Formula& f, VarIndex v, const Term& closed);

/// Not(f). Never normalizes.
Formula negate(const Formula& f);

}  // namespace arith

#endif  // ARITH_LANGUAGE_HPP_
