// Bounded, instance-level evaluation of the exclusivity/duality lemmas, the
// Bew/Wid conditionals, the K equivalence chain and the identity-law
// argument. Every verdict is a record; nothing is adjudicated beyond it.

#ifndef ARITH_AUDITOR_HPP_
#define ARITH_AUDITOR_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arith/calculus.hpp"
#include "arith/goedel_number.hpp"
#include "arith/search.hpp"

namespace arith {

enum class AuditTruth { Holds, Fails, NotEvaluable };
std::string_view to_string(AuditTruth t);

/// A checkable fact attached to a record: relation(code, formula) == holds.
struct Witness {
  enum class Relation { xBy, xWy };
  GoedelNumber code;
  Relation relation;
  Formula formula;
  bool holds;
};

struct AuditRecord {
  std::string claim;
  std::string instance;
  AuditTruth truth;
  std::vector<Witness> witnesses;
  std::string note;
};

/// Witness with `holds` computed by the calculus.
Witness make_witness(const Calculus& c, const GoedelNumber& code, Witness::Relation r, const Formula& f);

// --- lemmas ------------------------------------------------------------------

/// Exclusivity over a proof universe. "L1" checks that no x is both a proof
/// and a refutation of the same y (for every x, against its last line and,
/// when that is a negation, the negated formula: the only y for which either
/// relation can hold). "L1:pairs" checks that no formula has both a proof and
/// a refutation in the universe. One summary record each plus one Fails
/// record per violation.
std::vector<AuditRecord> scan_lemma1(const Calculus& c, const std::vector<ProofObject>& universe);

/// Characteristic-function duality for a witness. Throws
/// std::invalid_argument unless w proves or refutes y.
std::vector<AuditRecord> check_char_duality(const Calculus& c, const GoedelNumber& w, const GoedelNumber& y);

/// scan_lemma1 plus check_char_duality for every (proof, y) pair of the
/// universe, the latter folded into one summary record per claim.
std::vector<AuditRecord> audit_lemmas(const Calculus& c, const std::vector<ProofObject>& universe);

// --- diagonal claims ---------------------------------------------------------

/// Steps 7..13 of the K chain at (n, m), each adjacent pair in both
/// directions. The test universe is {0..cap-1} plus m plus any proof or
/// refutation of diag(n) found within the budget.
std::vector<AuditRecord> audit_chain(std::uint64_t n, const GoedelNumber& m, const SearchBudget& b,
                                     std::uint64_t universe_cap);

/// Conditionals I, III, IV, V, VI for diag(n); C when a candidate k is given.
std::vector<AuditRecord> audit_conditionals(std::uint64_t n, const SearchBudget& b,
                                            std::optional<std::uint64_t> k = std::nullopt);

/// The identity-law argument for phi_k(n) against ~phi_n(n). At k = n a
/// proof and a refutation of the same sentence trip a Fails record; the
/// calculus parameter exists so that tests can trip it.
std::vector<AuditRecord> audit_identity(std::uint64_t k, std::uint64_t n, const SearchBudget& b,
                                        const Calculus& c = Calculus::standard());

/// Empirical agreement of each candidate phi_c (c <= M) with bounded K
/// evidence over the sampled n. Never claims coextension.
std::vector<AuditRecord> search_coextensive(std::uint64_t max_candidate, const std::vector<std::uint64_t>& sample,
                                            const SearchBudget& b);

// --- reports -----------------------------------------------------------------

/// Claim first, then instance, comparing digit runs numerically.
void sort_records(std::vector<AuditRecord>& records);

/// One JSON object per line, fields in fixed order. Witness codes are
/// rendered in `mode`; the factored form stays small for proof codes.
std::string to_json_line(const AuditRecord& r, Render mode = Render::Factored);

/// Writes a run header (the given config object, serialized as JSON) and the
/// sorted records.
void write_report(std::ostream& out, const std::string& header_json, std::vector<AuditRecord> records,
                  Render mode = Render::Factored);

struct RevalidationResult {
  std::size_t records = 0;
  std::size_t witnesses = 0;
  std::vector<std::string> problems;  // empty when everything re-checks
};

/// Re-parses a report and re-runs every attached witness relation; also
/// checks that Fails records carry evidence.
RevalidationResult revalidate_report(std::istream& in, const Calculus& c = Calculus::standard());

struct AuditSuiteConfig {
  SearchBudget budget;
  std::uint64_t universe_cap = 64;
  std::uint64_t max_n = 30;
  GoedelNumber m;  // designated chain witness
  std::uint64_t coextensive_candidates = 20;
  std::uint64_t coextensive_sample = 10;
};

std::string header_json(const AuditSuiteConfig& cfg);

/// Everything above over the standard calculus: lemmas on the three-line
/// universe, duality for each of its witnesses, and the diagonal audits for
/// n = 1..max_n.
std::vector<AuditRecord> run_audit_suite(const AuditSuiteConfig& cfg);

}  // namespace arith

#endif  // ARITH_AUDITOR_HPP_
