#pragma once

// Report assembly shared by every CLI command: one struct of optional
// sections plus a text renderer and a JSON renderer. JSON output keeps all
// numbers as strings (exactness survives any consumer), field order is fixed,
// and every polynomial is rendered canonically so output reparses.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "keller/curve.hpp"
#include "keller/identities.hpp"
#include "keller/oracles.hpp"

namespace keller {

struct DetResSection {
  bool skipped = false;
  DetResReport rep;
};

struct OracleBSection {
  DegreeBounds bounds;
  std::optional<MPoly> g;
};

struct Report {
  std::string command;
  std::string input;
  std::optional<AssumptionsReport> assumptions;
  std::optional<MatrixM> matrix;
  std::optional<std::string> normalized;
  std::optional<DetResSection> detres;
  std::vector<IdentityReport> identities;
  std::optional<QOracleReport> q;
  std::optional<AssociatedG> associated;
  std::optional<std::string> associate_failure;
  std::optional<OracleBSection> oracle_b;
  std::optional<M3Report> m3;
  std::optional<ScanReport> scan;
  std::optional<bool> verdict;
  std::vector<std::string> warnings;
};

inline nlohmann::ordered_json render_json(const Report& rep) {
  using json = nlohmann::ordered_json;
  json out;
  out["command"] = rep.command;
  out["input"] = rep.input;
  if (rep.assumptions) {
    const auto& a = *rep.assumptions;
    json roots = json::array();
    for (const auto& r : a.bad_lambda_roots) roots.push_back(r.to_string());
    out["assumptions"] = {{"monic", a.monic_form_ok},
                          {"degree_bounds", a.degree_bounds_ok},
                          {"reduced", a.reduced_all_lambda},
                          {"bad_lambda_gcd", a.bad_lambda_gcd.to_string()},
                          {"bad_lambda_roots", roots},
                          {"dy_fx_positive", a.dy_fx_positive}};
  }
  if (rep.matrix) {
    json rows = json::array();
    for (long i = 0; i < rep.matrix->matrix.size(); ++i) {
      json row = json::array();
      for (long j = 0; j < rep.matrix->matrix.size(); ++j)
        row.push_back(rep.matrix->matrix.at(i, j).to_string());
      rows.push_back(row);
    }
    out["matrix"] = {{"m", std::to_string(rep.matrix->m)},
                     {"k_vanish", std::to_string(rep.matrix->k_vanish)},
                     {"rows", rows}};
  }
  if (rep.normalized) out["normalized"] = *rep.normalized;
  if (rep.detres) {
    json d;
    d["status"] = rep.detres->skipped ? "skipped" : "ok";
    if (!rep.detres->skipped) {
      d["k"] = std::to_string(rep.detres->rep.k);
      d["holds"] = rep.detres->rep.holds;
      d["det"] = rep.detres->rep.detM.to_string();
      d["res"] = rep.detres->rep.res.to_string();
    }
    out["detres"] = d;
  }
  if (!rep.identities.empty()) {
    json ids = json::array();
    for (const auto& r : rep.identities) {
      json e;
      e["family"] = std::string(1, r.family);
      e["k"] = std::to_string(r.k);
      e["i"] = r.i ? json(std::to_string(*r.i)) : json(nullptr);
      e["j"] = r.j ? json(std::to_string(*r.j)) : json(nullptr);
      e["residual"] = r.residual.to_string();
      e["holds"] = r.holds;
      ids.push_back(e);
    }
    out["identities"] = ids;
  }
  if (rep.q) {
    json orders = json::array();
    for (const auto& o : rep.q->orders) orders.push_back(o ? std::to_string(*o) : "inf");
    out["q"] = {{"N", std::to_string(rep.q->q.N)},
                {"orders", orders},
                {"poly", rep.q->q.Q.to_string()},
                {"component", rep.q->component}};
  }
  if (rep.associated) {
    json bs = json::array();
    for (const auto& b : rep.associated->b) bs.push_back(b.to_string());
    out["associated"] = {{"b", bs},
                         {"g", rep.associated->g.to_string()},
                         {"jac", rep.associated->jac_value.to_string()},
                         {"R", rep.associated->R.to_string()}};
  }
  if (rep.associate_failure) out["associate_failure"] = *rep.associate_failure;
  if (rep.oracle_b) {
    json o;
    o["degy"] = std::to_string(rep.oracle_b->bounds.degy_g);
    o["degx"] = std::to_string(rep.oracle_b->bounds.degx_b);
    o["found"] = rep.oracle_b->g.has_value();
    o["g"] = rep.oracle_b->g ? json(rep.oracle_b->g->to_string()) : json(nullptr);
    out["oracle"] = o;
  }
  if (rep.m3) {
    out["m3"] = {{"A3", rep.m3->A3},
                 {"B3", rep.m3->B3},
                 {"w_residual", rep.m3->w_residual.to_string()},
                 {"a2_residual", rep.m3->a2_residual.to_string()},
                 {"a3_residual_A", rep.m3->a3_residual_A.to_string()},
                 {"a3_residual_B", rep.m3->a3_residual_B.to_string()}};
  }
  if (rep.scan) {
    json cx = json::array();
    for (const auto& f : rep.scan->counterexamples) cx.push_back(f.as_poly().to_string());
    out["scan"] = {{"tested", std::to_string(rep.scan->tested)},
                   {"b_pass", std::to_string(rep.scan->b_pass)},
                   {"a_pass", std::to_string(rep.scan->a_pass)},
                   {"counterexamples", cx}};
  }
  out["verdict"] = rep.verdict ? json(*rep.verdict) : json(nullptr);
  json warn = json::array();
  for (const auto& w : rep.warnings) warn.push_back(w);
  out["warnings"] = warn;
  return out;
}

inline std::string render_text(const Report& rep) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "command: " << rep.command << "\n";
  os << "input: " << rep.input << "\n";
  if (rep.assumptions) {
    const auto& a = *rep.assumptions;
    os << "assumptions: monic=" << yn(a.monic_form_ok)
       << " degree_bounds=" << yn(a.degree_bounds_ok) << " reduced=" << yn(a.reduced_all_lambda)
       << " dy_fx_positive=" << yn(a.dy_fx_positive) << "\n";
    if (!a.reduced_all_lambda) {
      os << "  bad lambda gcd: " << a.bad_lambda_gcd.to_string() << " (in v)\n";
      for (const auto& r : a.bad_lambda_roots) os << "  non-reduced fiber at lambda = " << r << "\n";
    }
  }
  if (rep.matrix) {
    os << "M (" << rep.matrix->matrix.size() << "x" << rep.matrix->matrix.size()
       << ", k_vanish=" << rep.matrix->k_vanish << "):\n";
    for (long i = 0; i < rep.matrix->matrix.size(); ++i) {
      os << "  [";
      for (long j = 0; j < rep.matrix->matrix.size(); ++j)
        os << (j ? ", " : "") << rep.matrix->matrix.at(i, j).to_string();
      os << "]\n";
    }
  }
  if (rep.normalized) os << "normalized: " << *rep.normalized << "\n";
  if (rep.detres) {
    if (rep.detres->skipped) {
      os << "det/resultant relation: skipped (f'_x = 0)\n";
    } else {
      os << "det M = " << rep.detres->rep.detM.to_string()
         << ", resultant = " << rep.detres->rep.res.to_string() << ", k = " << rep.detres->rep.k
         << ": " << (rep.detres->rep.holds ? "holds" : "FAILS") << "\n";
    }
  }
  for (const auto& r : rep.identities) {
    os << r.family << " k=" << r.k;
    if (r.i) os << " i=" << *r.i;
    if (r.j) os << " j=" << *r.j;
    os << ": " << (r.holds ? "holds" : "FAILS") << "  residual " << r.residual.to_string() << "\n";
  }
  if (rep.q) {
    os << "Q = " << rep.q->q.Q.to_string() << "  (N = " << rep.q->q.N << ")\n";
    for (std::size_t i = 0; i < rep.q->orders.size(); ++i)
      os << "  ord Q_" << i << " = "
         << (rep.q->orders[i] ? std::to_string(*rep.q->orders[i]) : "inf") << "\n";
    os << "component: " << yn(rep.q->component) << "\n";
  }
  if (rep.associated) {
    for (std::size_t i = 0; i < rep.associated->b.size(); ++i)
      os << "b_" << i + 1 << " = " << rep.associated->b[i].to_string() << "\n";
    os << "g = " << rep.associated->g.to_string() << "\n";
    os << "Jac(f, g) = " << rep.associated->jac_value << "  (R = " << rep.associated->R << ")\n";
  }
  if (rep.associate_failure) os << "associate failed: " << *rep.associate_failure << "\n";
  if (rep.oracle_b) {
    os << "oracle bounds: deg_y <= " << rep.oracle_b->bounds.degy_g - 1
       << ", deg_x <= " << rep.oracle_b->bounds.degx_b << "\n";
    if (rep.oracle_b->g)
      os << "oracle g = " << rep.oracle_b->g->to_string() << "\n";
    else
      os << "oracle: no solution within bounds\n";
  }
  if (rep.m3) {
    os << "m3 A3=" << yn(rep.m3->A3) << " B3=" << yn(rep.m3->B3)
       << "  W'=" << rep.m3->w_residual.to_string()
       << "  a2''=" << rep.m3->a2_residual.to_string()
       << "  a3'''=" << rep.m3->a3_residual_A.to_string()
       << "  a3''=" << rep.m3->a3_residual_B.to_string() << "\n";
  }
  if (rep.scan) {
    os << "scan: tested=" << rep.scan->tested << " b_pass=" << rep.scan->b_pass
       << " a_pass=" << rep.scan->a_pass
       << " counterexamples=" << rep.scan->counterexamples.size() << "\n";
    for (const auto& f : rep.scan->counterexamples)
      os << "  counterexample: " << f.as_poly().to_string() << "\n";
  }
  for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
  if (rep.verdict) os << "verdict: " << (*rep.verdict ? "holds" : "fails") << "\n";
  return os.str();
}

}  // namespace keller
