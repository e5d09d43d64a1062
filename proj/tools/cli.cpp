#include "arith/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "arith/auditor.hpp"
#include "arith/codec.hpp"
#include "arith/diagonal.hpp"
#include "arith/search.hpp"
#include "arith/universe.hpp"
#include "json.hpp"

namespace arith {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A y argument may be a code or a formula.
GoedelNumber code_or_formula(const std::string& text) {
  try {
    return GoedelNumber::parse(text);
  } catch (const std::exception&) {
    return codec::formula_code(parse(text));
  }
}

std::string budget_check(const std::string& s) {
  try {
    parse_budget(s);
    return {};
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
}

struct Common {
  std::string render = "decimal";
  std::string budget = "4,12,4";
  unsigned workers = 1;
  std::string out_path;
  std::uint64_t universe_cap = 64;
};

void add_budget(CLI::App* app, Common& c) {
  app->add_option("--budget", c.budget, "Search budget L,S,P: max lines, max formula size, term-pool cap")
      ->check(budget_check)
      ->capture_default_str();
}

void add_report(CLI::App* app, Common& c) {
  app->add_option("--out", c.out_path, "Append the report to this file instead of printing it");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Goedel numbering, proof checking and bounded audits over first-order arithmetic", "arith"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Common opt;
  auto* render_opt = app.add_option("--render", opt.render, "Number rendering: decimal or factored")
                         ->check(CLI::IsMember({"decimal", "factored"}))
                         ->capture_default_str();
  app.add_option("--universe-cap", opt.universe_cap,
                 "Chain audits test the codes 0..cap-1 plus m plus any search witness")
      ->capture_default_str();

  std::string text, code_text, file, as = "proof", y_text, x_text, of_text;
  std::uint64_t n = 1, k = 1, count = 10, start = 1, max_candidate = 20;
  std::string m_text = "0";
  std::vector<std::uint64_t> sample;
  std::optional<std::uint64_t> k_opt;

  auto* encode = app.add_subcommand("encode", "Print the Goedel number of a formula");
  encode->add_option("formula", text, "Formula in the ASCII grammar")->required();

  auto* decode = app.add_subcommand("decode", "Decode a formula or proof code");
  decode->add_option("code", code_text, "Decimal, or a product of powers such as 2^3*3^11")->required();

  auto* check_proof = app.add_subcommand("check-proof", "Check a proof file");
  check_proof->add_option("file", file)->required();
  check_proof->add_option("--of", of_text, "Formula the proof should prove or refute");
  check_proof->add_option("--as", as, "Relation to check against --of")
      ->check(CLI::IsMember({"proof", "refutation"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Evaluate xBy or xWy on codes");
  check->require_subcommand(1);
  auto* xby = check->add_subcommand("xby", "x is a proof of y");
  auto* xwy = check->add_subcommand("xwy", "x is a refutation of y");
  for (auto* sub : {xby, xwy}) {
    sub->add_option("x", x_text, "Proof code")->required();
    sub->add_option("y", y_text, "Formula code or formula text")->required();
  }

  auto* decide = app.add_subcommand("decide", "Bounded search for a proof or refutation");
  decide->add_option("formula", text)->required();
  add_budget(decide, opt);
  decide->add_option("--workers", opt.workers, "Search threads")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List one-free-variable formulas in code order");
  enumerate->add_option("--count", count, "How many")->check(CLI::PositiveNumber)->capture_default_str();
  enumerate->add_option("--start", start, "First rank")->check(CLI::PositiveNumber)->capture_default_str();

  auto* diag_cmd = app.add_subcommand("diag", "Show phi_n, its diagonal instance, and bounded K evidence");
  diag_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  add_budget(diag_cmd, opt);

  auto* audit = app.add_subcommand("audit", "Run an audit and write a JSON-lines report");
  audit->require_subcommand(1);
  auto* a_lemmas = audit->add_subcommand("lemmas", "Exclusivity and duality over the three-line proof universe");
  auto* a_chain = audit->add_subcommand("chain", "The K chain at (n, m), both directions of each step");
  a_chain->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  a_chain->add_option("--m", m_text, "Designated proof-code candidate")->capture_default_str();
  auto* a_cond = audit->add_subcommand("conditionals", "Conditionals I, III-VI and optionally C");
  a_cond->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  a_cond->add_option("--k", k_opt, "Candidate rank for C")->check(CLI::PositiveNumber);
  auto* a_ident = audit->add_subcommand("identity", "Identity-law records for phi_k(n) against ~phi_n(n)");
  a_ident->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  a_ident->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  auto* a_coext = audit->add_subcommand("coextensive", "Agreement of phi_1..phi_M with bounded K evidence");
  a_coext->add_option("--max", max_candidate, "M")->check(CLI::PositiveNumber)->capture_default_str();
  a_coext->add_option("--sample", sample, "Ranks n to compare (default 1..10)")->delimiter(',');
  auto* a_suite = audit->add_subcommand("suite", "Everything above for n = 1..30 with m = 0");
  auto* a_verify = audit->add_subcommand("verify", "Re-check every witness in a report");
  a_verify->add_option("report", file)->required();
  for (auto* sub : {a_lemmas, a_chain, a_cond, a_ident, a_coext, a_suite}) {
    add_budget(sub, opt);
    add_report(sub, opt);
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Render render = opt.render == "factored" ? Render::Factored : Render::Decimal;
  // Reports default to the factored form: proof codes are too long in decimal.
  const Render report_render = render_opt->count() > 0 ? render : Render::Factored;

  auto emit_report = [&](const std::string& command, json config, std::vector<AuditRecord> records) {
    json header = {{"command", command}};
    for (auto& [key, value] : config.items()) header[key] = value;
    if (!header.contains("universe_cap")) header["universe_cap"] = opt.universe_cap;
    header["render"] = report_render == Render::Factored ? "factored" : "decimal";
    if (!opt.out_path.empty()) header["out"] = opt.out_path;
    if (opt.out_path.empty()) {
      write_report(out, header.dump(), std::move(records), report_render);
      return;
    }
    std::ofstream file_out(opt.out_path, std::ios::app);
    if (!file_out) throw std::invalid_argument("cannot write " + opt.out_path);
    const std::size_t size = records.size();
    write_report(file_out, header.dump(), std::move(records), report_render);
    out << "appended " << size << " records to " << opt.out_path << '\n';
  };

  try {
    if (*encode) {
      out << codec::formula_code(parse(text)).to_string(render) << '\n';
    } else if (*decode) {
      const GoedelNumber x = GoedelNumber::parse(code_text);
      if (codec::is_formula_code(x)) {
        out << "formula: " << print(codec::decode_formula(x)) << '\n';
      } else {
        const auto lines = codec::decode_proof(x);  // throws when not a proof-shaped code
        out << "sequence of " << lines.size() << " formulas (Bw: " << (bw(x) ? "true" : "false") << ")\n";
        for (std::size_t i = 0; i < lines.size(); ++i) out << (i + 1) << ": " << print(lines[i]) << '\n';
      }
    } else if (*check_proof) {
      const ProofObject p = parse_proof_file(read_file(file));
      if (auto bad = first_invalid_line(Calculus::standard(), p)) {
        err << "line " << *bad << " is not justified as stated\n";
        return kExitDomain;
      }
      const GoedelNumber w = p.code();
      out << "witness: " << w.to_string(render) << '\n';
      out << "Bw: " << (bw(w) ? "true" : "false") << '\n';
      if (!of_text.empty()) {
        const GoedelNumber y = codec::formula_code(parse(of_text));
        if (as == "proof") {
          out << "xBy: " << (xBy(w, y) ? "true" : "false") << '\n';
        } else {
          out << "xWy: " << (xWy(w, y) ? "true" : "false") << '\n';
        }
      }
    } else if (*check) {
      const GoedelNumber x = GoedelNumber::parse(x_text);
      const GoedelNumber y = code_or_formula(y_text);
      if (*xby) {
        out << "xBy: " << (xBy(x, y) ? "true" : "false") << "\ncB: " << cB(x, y) << '\n';
      } else {
        out << "xWy: " << (xWy(x, y) ? "true" : "false") << "\ncW: " << cW(x, y) << '\n';
      }
    } else if (*decide) {
      const SearchBudget b = parse_budget(opt.budget);
      const Verdict v = decide_bounded(parse(text), b, Calculus::standard(), opt.workers);
      out << "verdict: " << to_string(v.kind) << "\nbudget: " << to_string(b) << '\n';
      if (v.proof) {
        out << "witness: " << v.witness.to_string(render) << '\n' << format_proof_file(*v.proof);
      }
    } else if (*enumerate) {
      for (std::uint64_t r = start; r < start + count; ++r) {
        const PhiIndex p = phi(r);
        out << p.n << '\t' << print(p.formula) << '\t' << p.code.to_string(render) << '\n';
      }
    } else if (*diag_cmd) {
      const SearchBudget b = parse_budget(opt.budget);
      const PhiIndex p = phi(n);
      const KEvidence e = k_member_bounded(n, b, opt.workers);
      out << "phi: " << print(p.formula) << "\nphi code: " << p.code.to_string(render)
          << "\ndiag: " << print(diag_formula(n)) << "\ndiag code: " << diag(n).to_string(render)
          << "\nevidence: " << to_string(e.kind) << "\nbudget: " << to_string(b) << '\n';
      if (e.kind != KEvidence::Kind::Unknown) out << "witness: " << e.witness.to_string(render) << '\n';
    } else if (*a_verify) {
      std::istringstream in(read_file(file));
      const RevalidationResult r = revalidate_report(in);
      out << "records: " << r.records << "\nwitnesses: " << r.witnesses << "\nproblems: " << r.problems.size()
          << '\n';
      for (const auto& p : r.problems) out << p << '\n';
      return r.problems.empty() ? kExitOk : kExitDomain;
    } else if (*audit) {
      const SearchBudget b = parse_budget(opt.budget);
      const json base = {{"budget", to_string(b)}};
      if (*a_lemmas) {
        const auto universe = proof_universe(Calculus::standard());
        emit_report("audit lemmas", base, audit_lemmas(Calculus::standard(), universe));
      } else if (*a_chain) {
        const GoedelNumber m = GoedelNumber::parse(m_text);
        json cfg = base;
        cfg["n"] = n;
        cfg["m"] = m.to_string(report_render);
        cfg["universe_cap"] = opt.universe_cap;
        emit_report("audit chain", cfg, audit_chain(n, m, b, opt.universe_cap));
      } else if (*a_cond) {
        json cfg = base;
        cfg["n"] = n;
        if (k_opt) cfg["k"] = *k_opt;
        emit_report("audit conditionals", cfg, audit_conditionals(n, b, k_opt));
      } else if (*a_ident) {
        json cfg = base;
        cfg["k"] = k;
        cfg["n"] = n;
        emit_report("audit identity", cfg, audit_identity(k, n, b));
      } else if (*a_coext) {
        if (sample.empty()) {
          for (std::uint64_t i = 1; i <= 10; ++i) sample.push_back(i);
        }
        json cfg = base;
        cfg["max"] = max_candidate;
        cfg["sample"] = sample;
        emit_report("audit coextensive", cfg, search_coextensive(max_candidate, sample, b));
      } else if (*a_suite) {
        AuditSuiteConfig cfg;
        cfg.budget = b;
        cfg.universe_cap = opt.universe_cap;
        emit_report("audit suite", json::parse(header_json(cfg)), run_audit_suite(cfg));
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ProofFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace arith
