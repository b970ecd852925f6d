#pragma once

// Command-line driver. Subcommands:
//   assumptions normalize matrix detres check-a check-b associate
//   oracle-a oracle-b m3 scan report
// Exit codes: 0 = requested checks hold / construction succeeded,
// 1 = a mathematical check fails (a valid outcome), 2 = input/usage error.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "keller/curve.hpp"
#include "keller/errors.hpp"
#include "keller/identities.hpp"
#include "keller/oracles.hpp"
#include "keller/parse.hpp"
#include "keller/report.hpp"

namespace keller::cli {

namespace detail {

struct CommonOpts {
  std::string poly;
  std::string file;
  bool json = false;
};

// Loads a curve from --poly text or --file (expression text, or a JSON
// object {"m": int, "a": [[ratstr, ...], ...]} with ascending x-powers).
inline CurveF load_curve(const CommonOpts& opts, std::vector<std::string>* warnings,
                         std::string* echo) {
  if (opts.poly.empty() == opts.file.empty())
    throw NonConformingInput("provide exactly one of --poly or --file");
  if (!opts.poly.empty()) {
    *echo = opts.poly;
    return parse_curve(opts.poly, warnings);
  }
  std::ifstream in(opts.file);
  if (!in) throw NonConformingInput("cannot open file: " + opts.file);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  *echo = opts.file;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw NonConformingInput(std::string("bad JSON input: ") + e.what());
    }
    if (!j.contains("m") || !j.contains("a") || !j["m"].is_number_integer() || !j["a"].is_array())
      throw NonConformingInput("JSON input needs integer \"m\" and array \"a\"");
    long m = j["m"].get<long>();
    std::vector<MPoly> a;
    for (const auto& coeffs : j["a"]) {
      if (!coeffs.is_array()) throw NonConformingInput("each a_i must be an array of rationals");
      MPoly ai;
      long e = 0;
      for (const auto& c : coeffs) {
        if (!c.is_string()) throw NonConformingInput("rational entries must be strings");
        ai += MPoly::monomial(Rational::from_string(c.get<std::string>()), Var::x, e++);
      }
      a.push_back(ai);
    }
    return CurveF(m, std::move(a));
  }
  // strip trailing newline noise from expression files
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return parse_curve(text, warnings);
}

inline void emit(const Report& rep, bool json, std::ostream& out) {
  if (json)
    out << render_json(rep).dump(2) << "\n";
  else
    out << render_text(rep);
}

inline void attach_assumption_warnings(const AssumptionsReport& a, Report* rep) {
  if (!a.degree_bounds_ok) rep->warnings.push_back("main assumption violated: some deg a_i > i");
  if (!a.reduced_all_lambda)
    rep->warnings.push_back("main assumption violated: f - lambda is not reduced for every lambda");
  if (!a.dy_fx_positive) rep->warnings.push_back("main assumption violated: deg_y f'_x = 0");
}

inline int run_curve_command(const std::string& name, const CommonOpts& opts, std::ostream& out) {
  Report rep;
  rep.command = name;
  CurveF f = load_curve(opts, &rep.warnings, &rep.input);
  AssumptionsReport assum = check_main_assumptions(f);

  if (name == "assumptions") {
    rep.assumptions = assum;
    rep.verdict = assum.all_ok();
  } else if (name == "normalize") {
    rep.normalized = normalize_a1(f).as_poly().to_string();
  } else if (name == "matrix") {
    rep.matrix = build_M(f);
  } else if (name == "detres") {
    attach_assumption_warnings(assum, &rep);
    DetResSection d;
    try {
      d.rep = check_detM_resultant(f);
      rep.verdict = d.rep.holds;
    } catch (const ZeroPartialX&) {
      d.skipped = true;
      rep.warnings.push_back("f'_x = 0: relation undefined, skipped");
    }
    rep.detres = d;
  } else if (name == "check-a") {
    attach_assumption_warnings(assum, &rep);
    TheoremReport t = check_theorem_A(f);
    rep.identities = t.identities;
    rep.verdict = t.verdict;
  } else if (name == "check-b") {
    if (!assum.reduced_all_lambda)
      rep.warnings.push_back("main assumption violated: f - lambda is not reduced for every lambda");
    TheoremReport t = check_theorem_B(f);
    rep.identities = t.identities;
    rep.verdict = t.verdict;
  } else if (name == "associate") {
    try {
      rep.associated = construct_associated(f);
      rep.verdict = true;
    } catch (const NotKeller& e) {
      rep.associate_failure = e.what();
      rep.verdict = false;
    } catch (const ReconstructionMismatch& e) {
      rep.associate_failure = e.what();
      rep.verdict = false;
    }
  } else if (name == "oracle-a") {
    attach_assumption_warnings(assum, &rep);
    QOracleReport q = component_oracle_Q(f);
    rep.verdict = q.component;
    rep.q = std::move(q);
  } else if (name == "m3") {
    if (f.m != 3) throw NonConformingInput("m3 requires a curve of y-degree 3");
    CurveF g = f;
    if (!f.a[0].is_zero()) {
      g = normalize_a1(f);
      rep.warnings.push_back("a_1 nonzero; normalized before applying the m=3 forms");
    }
    rep.m3 = identities_m3(g.a[1], g.a[2]);
    rep.verdict = rep.m3->A3 && rep.m3->B3;
  }
  emit(rep, opts.json, out);
  if (!rep.verdict.has_value()) return 0;  // purely constructive command
  return *rep.verdict ? 0 : 1;
}

inline int run_oracle_b(const CommonOpts& opts, const std::string& bounds_text,
                        std::ostream& out) {
  Report rep;
  rep.command = "oracle-b";
  CurveF f = load_curve(opts, &rep.warnings, &rep.input);
  DegreeBounds bounds = DegreeBounds::defaults(f.m);
  if (!bounds_text.empty()) {
    auto colon = bounds_text.find(':');
    if (colon == std::string::npos)
      throw NonConformingInput("--bounds expects degy:degx");
    try {
      bounds.degy_g = std::stol(bounds_text.substr(0, colon));
      bounds.degx_b = std::stol(bounds_text.substr(colon + 1));
    } catch (const std::exception&) {
      throw NonConformingInput("--bounds expects degy:degx");
    }
  }
  OracleBSection sec;
  sec.bounds = bounds;
  sec.g = keller_oracle_linear(f, bounds);
  rep.verdict = sec.g.has_value();
  rep.oracle_b = std::move(sec);
  emit(rep, opts.json, out);
  return *rep.verdict ? 0 : 1;
}

inline int run_scan(long m, const std::string& range_text, bool exhaustive, long samples,
                    std::uint64_t seed, bool json, std::ostream& out) {
  auto colon = range_text.find(':');
  if (colon == std::string::npos) throw NonConformingInput("--range expects lo:hi");
  long lo = 0, hi = 0;
  try {
    lo = std::stol(range_text.substr(0, colon));
    hi = std::stol(range_text.substr(colon + 1));
  } catch (const std::exception&) {
    throw NonConformingInput("--range expects lo:hi");
  }
  Report rep;
  rep.command = "scan";
  rep.input = "m=" + std::to_string(m) + " range=" + std::to_string(lo) + ":" +
              std::to_string(hi) + (exhaustive ? " exhaustive" : " samples=" +
              std::to_string(samples) + " seed=" + std::to_string(seed));
  ScanBudget budget{exhaustive, samples, seed};
  rep.scan = implication_scan(m, lo, hi, budget);
  rep.verdict = rep.scan->counterexamples.empty();
  emit(rep, json, out);
  return *rep.verdict ? 0 : 1;
}

// report = everything applicable to one curve
inline int run_report(const CommonOpts& opts, std::ostream& out) {
  Report rep;
  rep.command = "report";
  CurveF f = load_curve(opts, &rep.warnings, &rep.input);
  AssumptionsReport assum = check_main_assumptions(f);
  rep.assumptions = assum;
  attach_assumption_warnings(assum, &rep);

  bool ok = true;
  DetResSection d;
  try {
    d.rep = check_detM_resultant(f);
    ok = ok && d.rep.holds;
  } catch (const ZeroPartialX&) {
    d.skipped = true;
    rep.warnings.push_back("f'_x = 0: det/resultant relation skipped");
  }
  rep.detres = d;

  TheoremReport ta = check_theorem_A(f);
  TheoremReport tb = check_theorem_B(f);
  rep.identities = ta.identities;
  rep.identities.insert(rep.identities.end(), tb.identities.begin(), tb.identities.end());
  ok = ok && ta.verdict && tb.verdict;

  try {
    QOracleReport q = component_oracle_Q(f);
    ok = ok && q.component;
    rep.q = std::move(q);
  } catch (const DegenerateQ& e) {
    rep.warnings.push_back(e.what());
    ok = false;
  }

  if (tb.verdict) {
    try {
      rep.associated = construct_associated(f);
    } catch (const NotKeller& e) {
      rep.associate_failure = e.what();
      ok = false;
    } catch (const ReconstructionMismatch& e) {
      rep.associate_failure = e.what();
      ok = false;
    }
  }

  if (f.m == 3 && f.a[0].is_zero()) rep.m3 = identities_m3(f.a[1], f.a[2]);

  rep.verdict = ok;
  emit(rep, opts.json, out);
  return ok ? 0 : 1;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"determinant-identity checks for monic plane curves"};
  app.require_subcommand(1);

  detail::CommonOpts opts;
  std::string bounds_text, range_text = "-1:1";
  long scan_m = 2, samples = 200;
  std::uint64_t seed = 1;
  bool exhaustive = false;

  std::vector<std::string> curve_cmds = {"assumptions", "normalize", "matrix", "detres",
                                         "check-a",     "check-b",   "associate", "oracle-a",
                                         "m3"};
  for (const auto& name : curve_cmds) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--poly", opts.poly, "polynomial expression in x, y");
    sub->add_option("--file", opts.file, "input file (expression or JSON)");
    sub->add_flag("--json", opts.json, "machine-readable output");
  }
  CLI::App* ob = app.add_subcommand("oracle-b");
  ob->add_option("--poly", opts.poly);
  ob->add_option("--file", opts.file);
  ob->add_flag("--json", opts.json);
  ob->add_option("--bounds", bounds_text, "degy:degx ansatz bounds");

  CLI::App* sc = app.add_subcommand("scan");
  sc->add_option("--m", scan_m, "y-degree, 2..4")->required();
  sc->add_option("--range", range_text, "coefficient range lo:hi");
  sc->add_flag("--exhaustive", exhaustive, "walk the whole coefficient box");
  sc->add_option("--samples", samples, "random instances when not exhaustive");
  sc->add_option("--seed", seed, "sampling seed");
  sc->add_flag("--json", opts.json);

  CLI::App* rp = app.add_subcommand("report");
  rp->add_option("--poly", opts.poly);
  rp->add_option("--file", opts.file);
  rp->add_flag("--json", opts.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    std::string name = app.get_subcommands().front()->get_name();
    if (name == "oracle-b") return detail::run_oracle_b(opts, bounds_text, out);
    if (name == "scan")
      return detail::run_scan(scan_m, range_text, exhaustive, samples, seed, opts.json, out);
    if (name == "report") return detail::run_report(opts, out);
    return detail::run_curve_command(name, opts, out);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotMonicInY& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonConformingInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateQ& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace keller::cli
