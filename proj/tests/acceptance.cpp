// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "arith/auditor.hpp"
#include "arith/codec.hpp"
#include "arith/diagonal.hpp"
#include "arith/model.hpp"
#include "arith/universe.hpp"
#include "support/generators.hpp"

using namespace arith;

namespace {

const SearchBudget kBudget{4, 12, 4};

struct Outcome {
  bool pass;
  std::string detail;
};

// Sentences proved anywhere in criteria 2-6, for the soundness spot-check.
std::vector<Formula> g_proved;

void note_proved(const std::vector<Formula>& lines) {
  for (const auto& f : lines) {
    if (free_vars(f).empty()) g_proved.push_back(f);
  }
}

Outcome codec_round_trip() {
  const std::vector<std::uint64_t> alphabet = {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23};  // x0, x1 last
  std::size_t strings = 0, failures = 0;
  std::vector<std::uint64_t> cur;
  std::function<void(std::size_t)> visit = [&](std::size_t len) {
    if (!cur.empty()) {
      const GoedelNumber x = codec::encode_seq(cur);
      const auto back = codec::decode_seq(x);
      bool ok = back.size() == cur.size();
      for (std::size_t i = 0; ok && i < cur.size(); ++i) ok = back[i] == GoedelNumber(cur[i]);
      if (ok && codec::is_formula_code(x)) ok = codec::formula_code(codec::decode_formula(x)) == x;
      failures += !ok;
      ++strings;
    }
    if (len == 0) return;
    for (auto c : alphabet) {
      cur.push_back(c);
      visit(len - 1);
      cur.pop_back();
    }
  };
  visit(6);

  testing::Enumerator gen({0, 1});
  std::size_t formulas = 0;
  for (const Formula& f : gen.formulas_up_to(7)) {
    failures += !(codec::decode_formula(codec::formula_code(f)) == f);
    ++formulas;
  }
  return {failures == 0, std::to_string(strings) + " token strings, " + std::to_string(formulas) + " formulas, " +
                             std::to_string(failures) + " failures"};
}

Outcome exclusivity(const std::vector<ProofObject>& universe) {
  const auto& c = Calculus::standard();
  std::size_t pairs = 0, violations = 0;
  for (const auto& p : universe) {
    note_proved(p.lines);
    const GoedelNumber x = p.code();
    std::vector<Formula> ys = {p.conclusion()};
    if (p.conclusion().kind() == Formula::Kind::Not) ys.push_back(p.conclusion().body());
    for (const auto& f : ys) {
      const GoedelNumber y = codec::formula_code(f);
      violations += c.xBy(x, y) && c.xWy(x, y);
      ++pairs;
    }
  }
  bool scan_ok = true;
  for (const auto& r : scan_lemma1(c, universe)) scan_ok = scan_ok && r.truth == AuditTruth::Holds;
  return {violations == 0 && scan_ok, std::to_string(universe.size()) + " proofs, " + std::to_string(pairs) +
                                          " (x, y) pairs, " + std::to_string(violations) + " violations"};
}

Outcome duality(const std::vector<ProofObject>& universe) {
  const auto& c = Calculus::standard();
  std::size_t witnesses = 0, wrong = 0;
  for (const auto& p : universe) {
    const GoedelNumber x = p.code();
    const GoedelNumber y = codec::formula_code(p.conclusion());
    wrong += !(c.cB(x, y) == 0 && c.cW(x, y) == 1);
    ++witnesses;
    if (p.conclusion().kind() == Formula::Kind::Not) {
      const GoedelNumber z = codec::formula_code(p.conclusion().body());
      wrong += !(c.cW(x, z) == 0 && c.cB(x, z) == 1);
      ++witnesses;
    }
  }
  return {wrong == 0, std::to_string(witnesses) + " witnesses, " + std::to_string(wrong) + " wrong values"};
}

Outcome refutation_fixture() {
  const Formula f = parse("S(0)=0");
  const Verdict v = decide_bounded(f, kBudget, Calculus::standard(), 1);
  if (v.kind != Verdict::Kind::Refutable || !v.proof) return {false, "verdict " + std::string(to_string(v.kind))};
  note_proved(v.proof->lines);
  bool same = true;
  for (int i = 0; i < 2; ++i) same = same && decide_bounded(f, kBudget, Calculus::standard(), 1).witness == v.witness;
  for (unsigned w : {2u, 4u}) same = same && decide_bounded(f, kBudget, Calculus::standard(), w).witness == v.witness;
  const bool wy = xWy(v.witness, codec::formula_code(f));
  bool v_holds = false;
  if (diag_formula(1) == f) {
    for (const auto& r : audit_conditionals(1, kBudget)) {
      if (r.claim == "V" && r.truth == AuditTruth::Holds && !r.witnesses.empty() &&
          r.witnesses.front().code == v.witness) {
        v_holds = true;
      }
    }
  }
  return {same && wy && v_holds, std::string("xWy ") + (wy ? "true" : "false") + ", (V) " +
                                     (v_holds ? "Holds" : "missing") + ", witness " +
                                     (same ? "stable over 5 runs and 1/2/4 workers" : "unstable")};
}

Outcome mutation(const std::vector<ProofObject>& universe) {
  const auto& c = Calculus::standard();
  std::size_t proofs = 0, mutants = 0, survivors = 0;
  for (const auto& p : universe) {
    const auto ms = invalidating_mutants(c, p.lines);
    proofs += !ms.empty();
    for (const auto& m : ms) {
      survivors += c.bw(codec::proof_code(m.lines));
      ++mutants;
    }
  }
  return {proofs >= 100 && survivors == 0, std::to_string(proofs) + " proofs, " + std::to_string(mutants) +
                                               " mutants, " + std::to_string(mutants - survivors) + " killed"};
}

Outcome chain() {
  std::vector<AuditRecord> all;
  std::vector<std::uint64_t> hits;
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const auto rs = audit_chain(n, GoedelNumber(0), kBudget, 64);
    bool fwd = false, back = false;
    for (const auto& r : rs) {
      if (r.claim == "chain:9->10") fwd = r.truth == AuditTruth::Holds;
      if (r.claim == "chain:10->9" && r.truth == AuditTruth::Fails) {
        for (const auto& w : r.witnesses) back = back || (w.relation == Witness::Relation::xBy && w.holds);
      }
      for (const auto& w : r.witnesses) {
        if (w.holds) note_proved(codec::decode_proof(w.code));
      }
    }
    if (fwd && back) hits.push_back(n);
    all.insert(all.end(), rs.begin(), rs.end());
  }
  std::stringstream report;
  write_report(report, R"({"command":"acceptance chain"})", all);
  const RevalidationResult rv = revalidate_report(report);
  std::string which;
  for (auto n : hits) which += (which.empty() ? "" : ",") + std::to_string(n);
  return {!hits.empty() && rv.problems.empty() && rv.records == all.size(),
          "9->10 Holds with witnessed 10->9 Fails at n=" + (which.empty() ? "none" : which) + "; re-validated " +
              std::to_string(rv.witnesses) + " witnesses in " + std::to_string(rv.records) + " records, " +
              std::to_string(rv.problems.size()) + " problems"};
}

Outcome soundness() {
  std::set<std::string> seen;
  std::size_t falses = 0;
  for (const auto& f : g_proved) {
    if (!seen.insert(print(f)).second) continue;
    falses += eval_closed(f, 1000) == Truth::False;
  }
  return {falses == 0, std::to_string(seen.size()) + " distinct sentences, " + std::to_string(falses) + " false"};
}

Outcome determinism() {
  std::string bodies[2];
  for (auto& body : bodies) {
    const AuditSuiteConfig cfg;
    std::ostringstream out;
    write_report(out, header_json(cfg), run_audit_suite(cfg));
    body = out.str();
  }
  return {bodies[0] == bodies[1], std::to_string(bodies[0].size()) + " bytes per report, " +
                                      (bodies[0] == bodies[1] ? "identical" : "different")};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const std::function<Outcome()>& criterion) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criterion();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s  %s (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  };
  const auto universe = proof_universe(Calculus::standard());
  report(1, codec_round_trip);
  report(2, [&] { return exclusivity(universe); });
  report(3, [&] { return duality(universe); });
  report(4, refutation_fixture);
  report(5, [&] { return mutation(universe); });
  report(6, chain);
  report(7, soundness);
  report(8, determinism);
  return failed;
}
