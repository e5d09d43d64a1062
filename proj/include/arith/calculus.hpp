// Hilbert-style calculus over the arithmetic language and the decidable
// proof predicates built on it.
//
// Axioms: the propositional schemas L1-L3, the quantifier schemas Q1/Q2,
// equality schemas over variables, and a finite list of closed arithmetic
// axioms. Rules: modus ponens and generalization.

#ifndef ARITH_CALCULUS_HPP_
#define ARITH_CALCULUS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arith/goedel_number.hpp"
#include "arith/language.hpp"

namespace arith {

struct AxiomInstance {
  std::string schema;
  friend bool operator==(const AxiomInstance&, const AxiomInstance&) = default;
};

/// Line indices are 1-based, as in proof files.
struct ModusPonens {
  std::size_t minor;  // psi
  std::size_t major;  // psi -> phi
  friend bool operator==(const ModusPonens&, const ModusPonens&) = default;
};

struct Generalization {
  std::size_t line;
  VarIndex var;
  friend bool operator==(const Generalization&, const Generalization&) = default;
};

using Justification = std::variant<AxiomInstance, ModusPonens, Generalization>;

std::string to_string(const Justification& j);

struct NamedAxiom {
  std::string id;
  Formula formula;
};

class Calculus {
 public:
  /// Logical schemas plus the seven arithmetic axioms A1-A7.
  Calculus();

  static const Calculus& standard();

  /// A copy with additional closed axioms (test fixtures).
  Calculus with_extra_axioms(std::vector<NamedAxiom> extra) const;

  const std::vector<NamedAxiom>& arithmetic_axioms() const noexcept { return axioms_; }
  const std::vector<std::string>& schema_ids() const noexcept { return schema_ids_; }

  /// First schema (in schema_ids() order) the formula instantiates.
  std::optional<std::string> is_axiom(const Formula& f) const;
  bool is_instance_of(const Formula& f, std::string_view schema) const;

  /// Modus ponens is tried before generalization; ties are broken by the
  /// lexicographically smallest premise indices.
  std::optional<Justification> is_immediate_consequence(const Formula& f, std::span<const Formula> earlier) const;

  /// Whether `j` correctly justifies line `index` (1-based) of `lines`.
  bool justifies(const Justification& j, std::span<const Formula> lines, std::size_t index) const;

  /// Bw(x): x codes a nonempty sequence of formulas, each an axiom or an
  /// immediate consequence of earlier ones. Total over the naturals.
  bool bw(const GoedelNumber& x) const;
  /// x B y: Bw(x) and the last line of x is y.
  bool xBy(const GoedelNumber& x, const GoedelNumber& y) const;
  /// x W y: Bw(x) and the last line of x is Neg(y).
  bool xWy(const GoedelNumber& x, const GoedelNumber& y) const;
  /// Characteristic functions: 0 when the predicate holds, 1 otherwise.
  int cB(const GoedelNumber& x, const GoedelNumber& y) const { return xBy(x, y) ? 0 : 1; }
  int cW(const GoedelNumber& x, const GoedelNumber& y) const { return xWy(x, y) ? 0 : 1; }

  /// Bw over already-decoded lines.
  bool is_proof(std::span<const Formula> lines) const;

 private:
  std::vector<NamedAxiom> axioms_;
  std::vector<std::string> schema_ids_;
};

// Shorthands over Calculus::standard().
std::optional<std::string> is_axiom(const Formula& f);
std::optional<Justification> is_immediate_consequence(const Formula& f, std::span<const Formula> earlier);
bool bw(const GoedelNumber& x);
bool xBy(const GoedelNumber& x, const GoedelNumber& y);
bool xWy(const GoedelNumber& x, const GoedelNumber& y);
int cB(const GoedelNumber& x, const GoedelNumber& y);
int cW(const GoedelNumber& x, const GoedelNumber& y);

/// A proof with explicit justifications, as read from a proof file.
struct ProofObject {
  std::vector<Formula> lines;
  std::vector<Justification> justs;

  GoedelNumber code() const;
  const Formula& conclusion() const { return lines.back(); }
};

class ProofFileError : public std::runtime_error {
 public:
  ProofFileError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Proof file format: one step per line, "<formula> ; <justification>" with
/// justifications ax:<id>, mp:<i>,<j>, gen:<i>,x<v>. Blank lines and lines
/// starting with '#' are ignored.
ProofObject parse_proof_file(std::string_view text);
std::string format_proof_file(const ProofObject& p);

/// Checks every stated justification. Returns the 1-based index of the first
/// bad line, or nullopt when the proof is valid.
std::optional<std::size_t> first_invalid_line(const Calculus& c, const ProofObject& p);

/// Attaches the canonical justification to each line; nullopt if some line
/// has none.
std::optional<ProofObject> justify(const Calculus& c, std::vector<Formula> lines);

}  // namespace arith

#endif  // ARITH_CALCULUS_HPP_
