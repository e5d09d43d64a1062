#include "arith/auditor.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "arith/codec.hpp"
#include "arith/diagonal.hpp"
#include "arith/universe.hpp"
#include "json.hpp"

namespace arith {

using json = nlohmann::ordered_json;

std::string_view to_string(AuditTruth t) {
  switch (t) {
    case AuditTruth::Holds: return "Holds";
    case AuditTruth::Fails: return "Fails";
    case AuditTruth::NotEvaluable: return "NotEvaluable";
  }
  return "NotEvaluable";
}

namespace {

std::string_view relation_name(Witness::Relation r) { return r == Witness::Relation::xBy ? "xBy" : "xWy"; }

bool eval_relation(const Calculus& c, const GoedelNumber& x, Witness::Relation r, const Formula& f) {
  const GoedelNumber y = codec::formula_code(f);
  return r == Witness::Relation::xBy ? c.xBy(x, y) : c.xWy(x, y);
}

AuditTruth implication(bool a, bool b) { return !a || b ? AuditTruth::Holds : AuditTruth::Fails; }
AuditTruth holds_if(bool v) { return v ? AuditTruth::Holds : AuditTruth::Fails; }

std::string yes_no(bool v) { return v ? "true" : "false"; }

// Bounded evidence about a closed formula: least proofs of it and of its
// negation within the budget.
struct Decided {
  Formula formula;
  std::optional<ProofObject> proof;
  std::optional<ProofObject> refutation;

  std::optional<bool> truth() const {
    if (proof && !refutation) return true;
    if (refutation && !proof) return false;
    return std::nullopt;
  }
};

Decided decide_both(const Formula& f, const SearchBudget& b, const Calculus& c = Calculus::standard()) {
  const ProofSearch s(c, b);
  return {f, s.least_proof(f), s.least_proof(negate(f))};
}

std::string budget_text(const SearchBudget& b) { return "budget=" + to_string(b); }

// Natural order: digit runs compare as numbers.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string_view na(a.data() + i, ie - i), nb(b.data() + j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace

Witness make_witness(const Calculus& c, const GoedelNumber& code, Witness::Relation r, const Formula& f) {
  return {code, r, f, eval_relation(c, code, r, f)};
}

// --- lemmas ------------------------------------------------------------------

std::vector<AuditRecord> scan_lemma1(const Calculus& c, const std::vector<ProofObject>& universe) {
  using R = Witness::Relation;
  std::vector<AuditRecord> out;
  const std::string inst = "universe=" + std::to_string(universe.size());
  std::size_t pairs = 0, violations = 0;
  for (const auto& p : universe) {
    const GoedelNumber x = p.code();
    std::vector<Formula> ys = {p.conclusion()};
    if (p.conclusion().kind() == Formula::Kind::Not) ys.push_back(p.conclusion().body());
    for (const auto& y : ys) {
      ++pairs;
      const Witness b = make_witness(c, x, R::xBy, y);
      const Witness w = make_witness(c, x, R::xWy, y);
      if (b.holds && w.holds) {
        ++violations;
        out.push_back({"L1", inst + " y=" + print(y), AuditTruth::Fails, {b, w}, "x both proves and refutes y"});
      }
    }
  }
  out.push_back({"L1", inst, violations == 0 ? AuditTruth::Holds : AuditTruth::Fails, {},
                 std::to_string(pairs) + " (x, y) pairs checked, " + std::to_string(violations) + " violations"});

  // Consistency reading: a proof of y and a refutation of y anywhere.
  std::unordered_map<Formula, std::size_t, FormulaHash> first_proof;
  for (std::size_t i = 0; i < universe.size(); ++i) first_proof.emplace(universe[i].conclusion(), i);
  std::size_t clashes = 0;
  for (const auto& p : universe) {
    if (p.conclusion().kind() != Formula::Kind::Not) continue;
    const Formula y = p.conclusion().body();
    auto it = first_proof.find(y);
    if (it == first_proof.end()) continue;
    ++clashes;
    out.push_back({"L1:pairs", inst + " y=" + print(y), AuditTruth::Fails,
                   {make_witness(c, universe[it->second].code(), R::xBy, y), make_witness(c, p.code(), R::xWy, y)},
                   "y has both a proof and a refutation"});
  }
  out.push_back({"L1:pairs", inst, clashes == 0 ? AuditTruth::Holds : AuditTruth::Fails, {},
                 std::to_string(clashes) + " formulas with both a proof and a refutation"});
  return out;
}

std::vector<AuditRecord> check_char_duality(const Calculus& c, const GoedelNumber& w, const GoedelNumber& y) {
  using R = Witness::Relation;
  const bool B = c.xBy(w, y);
  const bool W = c.xWy(w, y);
  if (!B && !W) throw std::invalid_argument("check_char_duality: w neither proves nor refutes y");
  const Formula f = codec::decode_formula(y);
  const std::vector<Witness> ws = {{w, R::xBy, f, B}, {w, R::xWy, f, W}};
  const int cb = c.cB(w, y), cw = c.cW(w, y);
  const std::string inst = "y=" + print(f);
  const std::string values = "cB=" + std::to_string(cb) + " cW=" + std::to_string(cw);
  std::vector<AuditRecord> out;
  if (B) {
    out.push_back({"L2", inst, holds_if(cb == 0 && cw == 1), ws, values});
    out.push_back({"L4(III)", inst, holds_if(B == !W), ws, "xBy <=> ~xWy under: w proves y"});
  }
  if (W) {
    out.push_back({"L3", inst, holds_if(cw == 0 && cb == 1), ws, values});
    out.push_back({"L4(II)", inst, holds_if(W == !B), ws, "xWy <=> ~xBy under: w refutes y"});
  }
  out.push_back({"L4(I)", inst, holds_if(!(B && W)), ws, "not both xBy and xWy"});
  out.push_back({"L4(II):unconditional", inst, holds_if(W == !B), ws, "precondition dropped"});
  out.push_back({"L4(III):unconditional", inst, holds_if(B == !W), ws, "precondition dropped"});
  return out;
}

// --- diagonal claims ---------------------------------------------------------

std::vector<AuditRecord> audit_chain(std::uint64_t n, const GoedelNumber& m, const SearchBudget& b,
                                     std::uint64_t universe_cap) {
  using R = Witness::Relation;
  if (n == 0) throw std::invalid_argument("audit_chain: n starts at 1");
  const Calculus& c = Calculus::standard();
  const Decided d = decide_both(diag_formula(n), b);
  const Formula& F = d.formula;
  const std::string inst = "n=" + std::to_string(n) + " m=" + m.to_string() + " " + budget_text(b) +
                           " cap=" + std::to_string(universe_cap);

  std::vector<GoedelNumber> universe;
  for (std::uint64_t u = 0; u < universe_cap; ++u) universe.emplace_back(u);
  universe.push_back(m);
  if (d.proof) universe.push_back(d.proof->code());
  if (d.refutation) universe.push_back(d.refutation->code());

  std::optional<Witness> universe_proof;
  for (const auto& u : universe) {
    if (c.xBy(u, codec::formula_code(F))) {
      universe_proof = make_witness(c, u, R::xBy, F);
      break;
    }
  }
  const Witness mB = make_witness(c, m, R::xBy, F);
  const Witness mW = make_witness(c, m, R::xWy, F);

  // Bounded readings of each step, with the evidence they rest on.
  struct Step {
    bool value;
    bool surrogate;  // true when the faithful reading is unbounded
    std::vector<Witness> evidence;
    std::string reading;
  };
  std::vector<Witness> proof_ev, ref_ev;
  if (d.proof) proof_ev.push_back(make_witness(c, d.proof->code(), R::xBy, F));
  if (d.refutation) ref_ev.push_back(make_witness(c, d.refutation->code(), R::xWy, F));
  std::vector<Step> s(14);
  s[7] = {!d.proof, !d.proof, proof_ev, "n in K, read as: no proof of diag(n) within budget"};
  s[8] = {!d.proof, !d.proof, proof_ev, "no y with yB(diag n), read as: no proof within budget"};
  s[9] = {!universe_proof, false, universe_proof ? std::vector<Witness>{*universe_proof} : std::vector<Witness>{},
          "for all y in the test universe, not yB(diag n)"};
  s[10] = {!mB.holds, false, {mB}, "not mB(diag n)"};
  s[11] = {mW.holds, false, {mW}, "mW(diag n)"};
  s[12] = {d.refutation.has_value(), !d.refutation, ref_ev, "Wid(diag n), read as: refutation within budget"};
  s[13] = {d.refutation.has_value(), !d.refutation, ref_ev, "~diag(n) has a proof within budget"};

  std::vector<AuditRecord> out;
  for (int k = 7; k <= 13; ++k) {
    const Step& st = s[k];
    out.push_back({"chain:" + std::to_string(k), inst, holds_if(st.value), st.evidence, st.reading});
    if (st.surrogate) {
      out.push_back({"chain:" + std::to_string(k) + ":unbounded", inst, AuditTruth::NotEvaluable, {},
                     "unbounded quantifier over all proofs; bounded surrogate (" + st.reading + ") = " +
                         yes_no(st.value)});
    }
  }
  for (int k = 7; k < 13; ++k) {
    for (auto [a, z] : {std::pair{k, k + 1}, std::pair{k + 1, k}}) {
      const Step& sa = s[a];
      const Step& sz = s[z];
      const AuditTruth t = implication(sa.value, sz.value);
      std::vector<Witness> ev = sa.evidence;
      ev.insert(ev.end(), sz.evidence.begin(), sz.evidence.end());
      std::string note = "step " + std::to_string(a) + " = " + yes_no(sa.value) + ", step " + std::to_string(z) +
                         " = " + yes_no(sz.value);
      if (sa.surrogate || sz.surrogate) note += " (bounded surrogate involved)";
      out.push_back({"chain:" + std::to_string(a) + "->" + std::to_string(z), inst, t, std::move(ev), note});
    }
  }
  return out;
}

std::vector<AuditRecord> audit_conditionals(std::uint64_t n, const SearchBudget& b, std::optional<std::uint64_t> k) {
  using R = Witness::Relation;
  if (n == 0) throw std::invalid_argument("audit_conditionals: n starts at 1");
  const Calculus& c = Calculus::standard();
  const Decided d = decide_both(diag_formula(n), b);
  const Formula& F = d.formula;
  const std::string inst = "n=" + std::to_string(n) + " " + budget_text(b);
  std::vector<AuditRecord> out;

  std::vector<Witness> pw, rw;
  if (d.proof) pw = {make_witness(c, d.proof->code(), R::xBy, F)};
  if (d.refutation) {
    rw = {make_witness(c, d.refutation->code(), R::xWy, F),
          make_witness(c, d.refutation->code(), R::xBy, negate(F))};
  }

  // I: no proof within budget => ~F provable within budget.
  out.push_back({"I", inst, implication(!d.proof, d.refutation.has_value()), d.proof ? pw : rw,
                 d.proof ? "antecedent false: a proof exists" : "no proof within budget; refutation found = " +
                                                                    yes_no(d.refutation.has_value())});
  if (d.proof) {
    out.push_back({"III", inst, AuditTruth::Holds, pw, "the Bew witness is itself a bounded proof"});
  } else {
    out.push_back({"III", inst, AuditTruth::NotEvaluable, {}, "no proof within budget; Bew(diag n) unsettled"});
  }
  out.push_back({"IV", inst, AuditTruth::NotEvaluable, pw,
                 "consequent is non-provability (unbounded); bounded surrogate: proof found = " +
                     yes_no(d.proof.has_value())});
  if (d.refutation) {
    out.push_back({"V", inst, AuditTruth::Holds, rw, "the Wid witness is itself a bounded proof of the negation"});
  } else {
    out.push_back({"V", inst, AuditTruth::NotEvaluable, {}, "no refutation within budget; Wid(diag n) unsettled"});
  }
  out.push_back({"VI", inst, AuditTruth::NotEvaluable, rw,
                 "consequent is non-refutability (unbounded); bounded surrogate: refutation found = " +
                     yes_no(d.refutation.has_value())});

  if (k) {
    const Decided dk = decide_both(diag_formula(*k), b);
    const std::string kinst = inst + " k=" + std::to_string(*k);
    std::vector<Witness> ev;
    if (dk.proof) ev.push_back(make_witness(c, dk.proof->code(), R::xBy, dk.formula));
    if (dk.refutation) ev.push_back(make_witness(c, dk.refutation->code(), R::xWy, dk.formula));
    const auto t = dk.truth();
    if (t) {
      out.push_back({"C", kinst, AuditTruth::Fails, ev,
                     "phi_k(k) is bounded-" + std::string(*t ? "proved" : "refuted") +
                         "; p <=> ~p is propositionally unsatisfiable"});
    } else {
      out.push_back({"C", kinst, AuditTruth::NotEvaluable, ev, "phi_k(k) undecided within budget"});
    }
  }
  return out;
}

std::vector<AuditRecord> audit_identity(std::uint64_t k, std::uint64_t n, const SearchBudget& b, const Calculus& c) {
  using R = Witness::Relation;
  if (k == 0 || n == 0) throw std::invalid_argument("audit_identity: k and n start at 1");
  const PhiIndex pk = phi(k);
  const Formula left = subst_numeral(pk.formula, *free_vars(pk.formula).begin(), n);
  const Decided dl = decide_both(left, b, c);
  const Decided dr = decide_both(diag_formula(n), b, c);  // right side is its negation
  const std::string inst = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " " + budget_text(b);

  std::vector<Witness> ev;
  auto add = [&](const Decided& d) {
    if (d.proof) ev.push_back(make_witness(c, d.proof->code(), R::xBy, d.formula));
    if (d.refutation) ev.push_back(make_witness(c, d.refutation->code(), R::xWy, d.formula));
  };
  add(dl);
  if (!(dl.formula == dr.formula)) add(dr);

  std::vector<AuditRecord> out;
  // Tripwire: at k = n both sides are the same sentence, so a proof and a
  // refutation together mean the calculus is inconsistent.
  if (k == n && dl.proof && dl.refutation) {
    for (const char* id : {"identity:14", "identity:15"}) {
      out.push_back({id, inst, AuditTruth::NotEvaluable, ev, "both sides proved"});
    }
    out.push_back({"identity:16", inst, AuditTruth::Fails, ev, "phi_k(k) and ~phi_k(k) both proved: inconsistent"});
    return out;
  }
  const auto a = dl.truth();
  const auto r = dr.truth();
  if (!a || !r) {
    const std::string why = std::string(a ? "phi_n(n)" : r ? "phi_k(n)" : "phi_k(n) and phi_n(n)") +
                            " undecided within budget";
    for (const char* id : {"identity:14", "identity:15", "identity:16"}) {
      out.push_back({id, inst, AuditTruth::NotEvaluable, ev, why});
    }
    return out;
  }
  const bool lhs = *a, rhs = !*r;
  const bool bicond = lhs == rhs;
  const std::string vals = "phi_k(n) = " + yes_no(lhs) + ", ~phi_n(n) = " + yes_no(rhs);
  out.push_back({"identity:14", inst, holds_if(bicond), ev, vals});
  out.push_back({"identity:15", inst, implication(bicond, k != n), ev,
                 "(phi_k(n) <=> ~phi_n(n)) -> k != n; " + vals});
  if (bicond) {
    out.push_back({"identity:16", inst, holds_if(k != n), ev, "k != n follows from 14 and 15"});
  } else {
    out.push_back({"identity:16", inst, AuditTruth::NotEvaluable, ev, "premise 14 not confirmed at this instance"});
  }
  return out;
}

std::vector<AuditRecord> search_coextensive(std::uint64_t max_candidate, const std::vector<std::uint64_t>& sample,
                                            const SearchBudget& b) {
  using R = Witness::Relation;
  if (max_candidate == 0 || sample.empty()) throw std::invalid_argument("search_coextensive: empty search");
  const Calculus& c = Calculus::standard();
  std::vector<std::optional<bool>> in_k;  // per sample entry
  std::vector<Decided> diags;
  for (std::uint64_t n : sample) {
    diags.push_back(decide_both(diag_formula(n), b));
    const auto t = diags.back().truth();
    in_k.push_back(t ? std::optional<bool>(!*t) : std::nullopt);
  }
  std::string sample_text;
  for (std::uint64_t n : sample) sample_text += (sample_text.empty() ? "" : ",") + std::to_string(n);

  std::vector<AuditRecord> out;
  for (std::uint64_t cand = 1; cand <= max_candidate; ++cand) {
    const PhiIndex pc = phi(cand);
    const VarIndex v = *free_vars(pc.formula).begin();
    std::size_t agree = 0, disagree = 0, unknown = 0;
    std::vector<Witness> counter;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const Decided dc = decide_both(subst_numeral(pc.formula, v, sample[i]), b);
      const auto t = dc.truth();
      if (!t || !in_k[i]) {
        ++unknown;
      } else if (*t == *in_k[i]) {
        ++agree;
      } else {
        ++disagree;
        if (counter.empty()) {
          if (dc.proof) counter.push_back(make_witness(c, dc.proof->code(), R::xBy, dc.formula));
          if (dc.refutation) counter.push_back(make_witness(c, dc.refutation->code(), R::xWy, dc.formula));
          const Decided& dn = diags[i];
          if (dn.proof) counter.push_back(make_witness(c, dn.proof->code(), R::xBy, dn.formula));
          if (dn.refutation) counter.push_back(make_witness(c, dn.refutation->code(), R::xWy, dn.formula));
        }
      }
    }
    const std::size_t decided = agree + disagree;
    std::string note = "agree=" + std::to_string(agree) + " disagree=" + std::to_string(disagree) +
                       " unknown=" + std::to_string(unknown) + " decided=" + std::to_string(decided);
    out.push_back({"coextensive", "c=" + std::to_string(cand) + " sample=" + sample_text + " " + budget_text(b),
                   disagree > 0 ? AuditTruth::Fails : AuditTruth::NotEvaluable, std::move(counter), note});
  }
  return out;
}

// --- reports -----------------------------------------------------------------

void sort_records(std::vector<AuditRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const AuditRecord& a, const AuditRecord& b) {
    if (a.claim != b.claim) return natural_less(a.claim, b.claim);
    return natural_less(a.instance, b.instance);
  });
}

std::string to_json_line(const AuditRecord& r, Render mode) {
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back({{"code", w.code.to_string(mode)},
                  {"relation", relation_name(w.relation)},
                  {"formula", print(w.formula)},
                  {"holds", w.holds}});
  }
  json j = {{"claim", r.claim},
            {"instance", r.instance},
            {"truth", to_string(r.truth)},
            {"witnesses", ws},
            {"note", r.note}};
  return j.dump();
}

void write_report(std::ostream& out, const std::string& header, std::vector<AuditRecord> records, Render mode) {
  sort_records(records);
  json h = {{"record", "run-header"}, {"config", json::parse(header)}};
  out << h.dump() << '\n';
  for (const auto& r : records) out << to_json_line(r, mode) << '\n';
}

RevalidationResult revalidate_report(std::istream& in, const Calculus& c) {
  RevalidationResult res;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      res.problems.push_back(where + "not JSON");
      continue;
    }
    if (j.contains("record") && j["record"] == "run-header") continue;
    ++res.records;
    try {
      const std::string truth = j.at("truth");
      const auto& ws = j.at("witnesses");
      if (truth == "Fails" && ws.empty() && j.at("instance").get<std::string>().empty()) {
        res.problems.push_back(where + "Fails record without evidence");
      }
      for (const auto& w : ws) {
        ++res.witnesses;
        const GoedelNumber code = GoedelNumber::parse(w.at("code").get<std::string>());
        const Formula f = parse(w.at("formula").get<std::string>());
        const std::string rel = w.at("relation");
        if (rel != "xBy" && rel != "xWy") {
          res.problems.push_back(where + "unknown relation " + rel);
          continue;
        }
        const bool got = eval_relation(c, code, rel == "xBy" ? Witness::Relation::xBy : Witness::Relation::xWy, f);
        if (got != w.at("holds").get<bool>()) {
          res.problems.push_back(where + rel + " on " + print(f) + " does not reproduce");
        }
      }
    } catch (const std::exception& e) {
      res.problems.push_back(where + e.what());
    }
  }
  return res;
}

std::string header_json(const AuditSuiteConfig& cfg) {
  json j = {{"budget", to_string(cfg.budget)},
            {"universe_cap", cfg.universe_cap},
            {"max_n", cfg.max_n},
            {"m", cfg.m.to_string()},
            {"coextensive_candidates", cfg.coextensive_candidates},
            {"coextensive_sample", cfg.coextensive_sample}};
  return j.dump();
}

std::vector<AuditRecord> audit_lemmas(const Calculus& c, const std::vector<ProofObject>& universe) {
  std::vector<AuditRecord> out = scan_lemma1(c, universe);
  // Duality per witness, folded into one summary per claim; anything that
  // does not hold is kept verbatim.
  std::map<std::string, std::size_t> checked;
  for (const auto& p : universe) {
    std::vector<Formula> ys = {p.conclusion()};
    if (p.conclusion().kind() == Formula::Kind::Not) ys.push_back(p.conclusion().body());
    for (const auto& y : ys) {
      for (auto& r : check_char_duality(c, p.code(), codec::formula_code(y))) {
        ++checked[r.claim];
        if (r.truth != AuditTruth::Holds) out.push_back(std::move(r));
      }
    }
  }
  for (const auto& [claim, count] : checked) {
    const auto bad = std::count_if(out.begin(), out.end(), [&](const AuditRecord& r) { return r.claim == claim; });
    out.push_back({claim, "universe=" + std::to_string(universe.size()), bad == 0 ? AuditTruth::Holds : AuditTruth::Fails,
                   {}, std::to_string(count) + " witnesses checked, " + std::to_string(bad) + " failures"});
  }
  return out;
}

std::vector<AuditRecord> run_audit_suite(const AuditSuiteConfig& cfg) {
  std::vector<AuditRecord> out = audit_lemmas(Calculus::standard(), proof_universe(Calculus::standard()));
  std::vector<std::uint64_t> sample;
  for (std::uint64_t n = 1; n <= cfg.coextensive_sample; ++n) sample.push_back(n);
  auto append = [&out](std::vector<AuditRecord> rs) { out.insert(out.end(), rs.begin(), rs.end()); };
  for (std::uint64_t n = 1; n <= cfg.max_n; ++n) {
    append(audit_chain(n, cfg.m, cfg.budget, cfg.universe_cap));
    append(audit_conditionals(n, cfg.budget, n));
    append(audit_identity(n, n, cfg.budget));
    if (n != cfg.max_n) append(audit_identity(cfg.max_n, n, cfg.budget));
  }
  if (cfg.coextensive_candidates > 0 && !sample.empty()) {
    append(search_coextensive(cfg.coextensive_candidates, sample, cfg.budget));
  }
  sort_records(out);
  return out;
}

}  // namespace arith
