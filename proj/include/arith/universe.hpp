// Finite, deterministic families of proofs used by the auditor and by the
// mutation harness.

#ifndef ARITH_UNIVERSE_HPP_
#define ARITH_UNIVERSE_HPP_

#include <cstddef>
#include <vector>

#include "arith/calculus.hpp"
#include "arith/language.hpp"

namespace arith {

struct UniverseOptions {
  std::vector<Term> terms = {Term::numeral(0), Term::numeral(1), Term::numeral(2), Term::numeral(3)};
  std::vector<VarIndex> vars = {0, 1};
  std::size_t cap = 20000;  // proofs kept, in generation order
};

/// Axiom instances: the closed axioms, equality schemas over `vars`,
/// instantiations of the closed universals (and of the universals they
/// produce) at `terms`, and a handful of propositional instances.
std::vector<Formula> axiom_instances(const Calculus& c, const UniverseOptions& opt = {});

/// All tight proofs of at most three lines whose axiom lines come from
/// axiom_instances(): single axioms, generalization chains, and modus
/// ponens over two axiom lines (both orders). Every proof is valid.
std::vector<ProofObject> proof_universe(const Calculus& c, const UniverseOptions& opt = {});

/// Single-line mutations: wrap or strip a negation, swap disjuncts,
/// S-wrap the first term, swap x0/x1, bump the first 0, or replace by S(0)=0.
std::vector<Formula> line_mutations(const Formula& f);

struct Mutant {
  std::vector<Formula> lines;
  std::size_t line;  // 1-based index of the mutated line
};

/// Mutants of a proof in which the mutated line is neither an axiom nor an
/// immediate consequence of the lines before it.
std::vector<Mutant> invalidating_mutants(const Calculus& c, const std::vector<Formula>& proof);

}  // namespace arith

#endif  // ARITH_UNIVERSE_HPP_
