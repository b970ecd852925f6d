#pragma once

// Ground-truth machinery kept deliberately independent of the identity
// families: a brute-force Keller oracle that solves the full coefficient
// system of Jac(f, g) = 1 by exact sparse elimination, a generator of known
// automorphism components, and the (B) => (A) implication scanner.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "keller/curve.hpp"
#include "keller/errors.hpp"
#include "keller/identities.hpp"
#include "keller/mpoly.hpp"
#include "keller/rational.hpp"

namespace keller {

struct DegreeBounds {
  long degy_g = 0;  // ansatz spans y^0..y^{degy_g - 1}; must not exceed m
  long degx_b = 0;  // x-degree cap of each unknown coefficient

  static DegreeBounds defaults(long m) { return {m, 2 * m * m}; }
};

// Decides existence of g with Jac(f, g) = 1 within the ansatz
// g = sum_{i=1..degy_g} b_i(x) y^{degy_g - i}, deg_x b_i <= degx_b, by
// equating every (x, y)-monomial coefficient of Jac(f, g) - 1 to zero and
// solving the sparse rational linear system. A y^degy_g term needs no slot:
// its coefficient would have to be constant and can be removed by subtracting
// a multiple of f without changing the Jacobian. Free unknowns are pinned to
// 0, so the returned g is deterministic. nullopt means no solution exists
// within the bounds (a valid outcome, not an error).
inline std::optional<MPoly> keller_oracle_linear(const CurveF& f, const DegreeBounds& bounds) {
  if (bounds.degy_g < 0 || bounds.degx_b < 0)
    throw NonConformingInput("degree bounds must be non-negative");
  if (bounds.degy_g > f.m)
    throw NonConformingInput("degy_g exceeds m");
  const long ny = bounds.degy_g, nx = bounds.degx_b;
  MPoly fx = f.fx(), fy = f.fy();

  // unknown (i, a): coefficient of x^a in b_i, laid out as columns
  auto col_of = [&](long i, long a) { return (i - 1) * (nx + 1) + a; };
  const long ncols = ny * (nx + 1);

  // Jac(f, .) is linear in g; collect the coefficient rows of
  // Jac(f, x^a y^e) over all ansatz monomials, indexed by (x, y)-monomial.
  std::map<std::uint64_t, std::vector<std::pair<long, Rational>>> eq;
  for (long i = 1; i <= ny; ++i) {
    long e = ny - i;
    for (long a = 0; a <= nx; ++a) {
      MPoly contrib;
      if (e > 0) contrib += fx * MPoly::monomial(Rational(e), a, e - 1, 0, 0);
      if (a > 0) contrib -= fy * MPoly::monomial(Rational(a), a - 1, e, 0, 0);
      auto ys = contrib.coefficients_in(Var::y);
      for (std::size_t dy = 0; dy < ys.size(); ++dy) {
        auto xs = ys[dy].coefficients_in(Var::x);
        for (std::size_t dx = 0; dx < xs.size(); ++dx) {
          if (xs[dx].is_zero()) continue;
          std::uint64_t key = (static_cast<std::uint64_t>(dx) << 20) | dy;
          eq[key].emplace_back(col_of(i, a), xs[dx].as_constant());
        }
      }
    }
  }
  // right-hand side: Jac = 1, i.e. the constant monomial equals 1
  struct Row {
    std::vector<std::pair<long, Rational>> t;  // sorted by column
    Rational rhs;
  };
  std::vector<Row> rows;
  bool has_const_eq = false;
  for (auto& [key, entries] : eq) {
    Row r;
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [c, val] : entries) {
      if (!r.t.empty() && r.t.back().first == c)
        r.t.back().second += val;
      else
        r.t.emplace_back(c, val);
    }
    r.t.erase(std::remove_if(r.t.begin(), r.t.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              r.t.end());
    r.rhs = key == 0 ? Rational(1) : Rational(0);
    has_const_eq = has_const_eq || key == 0;
    if (!r.t.empty() || !r.rhs.is_zero()) rows.push_back(std::move(r));
  }
  if (!has_const_eq) return std::nullopt;  // constant monomial unreachable, 0 != 1

  // Gauss-Jordan with sparsest-row pivoting; everything stays exact.
  std::vector<Rational> value(static_cast<std::size_t>(ncols), Rational(0));
  std::vector<bool> done(rows.size(), false);
  std::vector<std::pair<long, std::size_t>> pivots;  // (column, row)
  auto coeff_of = [](const Row& r, long col) -> const Rational* {
    auto it = std::lower_bound(r.t.begin(), r.t.end(), col,
                               [](const auto& p, long c) { return p.first < c; });
    return (it != r.t.end() && it->first == col) ? &it->second : nullptr;
  };
  while (true) {
    std::size_t best = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (done[r] || rows[r].t.empty()) continue;
      if (best == rows.size() || rows[r].t.size() < rows[best].t.size()) best = r;
    }
    if (best == rows.size()) break;
    Row& p = rows[best];
    long pc = p.t.front().first;
    Rational pv = p.t.front().second;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == best) continue;
      const Rational* c = coeff_of(rows[r], pc);
      if (!c) continue;
      Rational factor = *c / pv;
      // rows[r] -= factor * p, merged by column
      std::vector<std::pair<long, Rational>> merged;
      merged.reserve(rows[r].t.size() + p.t.size());
      std::size_t a = 0, b = 0;
      while (a < rows[r].t.size() || b < p.t.size()) {
        if (b == p.t.size() ||
            (a < rows[r].t.size() && rows[r].t[a].first < p.t[b].first)) {
          merged.push_back(rows[r].t[a++]);
        } else if (a == rows[r].t.size() || p.t[b].first < rows[r].t[a].first) {
          merged.emplace_back(p.t[b].first, -factor * p.t[b].second);
          ++b;
        } else {
          Rational v = rows[r].t[a].second - factor * p.t[b].second;
          if (!v.is_zero()) merged.emplace_back(rows[r].t[a].first, v);
          ++a, ++b;
        }
      }
      rows[r].t = std::move(merged);
      rows[r].rhs -= factor * p.rhs;
    }
    done[best] = true;
    pivots.emplace_back(pc, best);
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].t.empty() && !rows[r].rhs.is_zero()) return std::nullopt;

  for (auto& [pc, r] : pivots) {
    // after full elimination the pivot row couples its column only to free
    // unknowns, all pinned to 0
    value[static_cast<std::size_t>(pc)] = rows[r].rhs / *coeff_of(rows[r], pc);
  }
  MPoly g;
  for (long i = 1; i <= ny; ++i)
    for (long a = 0; a <= nx; ++a) {
      const Rational& c = value[static_cast<std::size_t>(col_of(i, a))];
      if (!c.is_zero()) g += MPoly::monomial(c, a, ny - i, 0, 0);
    }
  if (jacobian(f.as_poly(), g) != MPoly::one())
    throw Error("keller_oracle_linear produced an inconsistent solution");
  return g;
}

struct CorpusSpec {
  long m = 2;
  std::vector<Rational> p;  // p_0..p_m ascending, p_m = 1
  std::vector<Rational> q;  // q_0, q_1 (missing entries are 0)
};

struct CorpusInstance {
  CurveF f;
  MPoly partner;  // y + q(x); Jac(f, partner) = 1 by construction
};

// f = x + p(y + q(x)), the first component of the tame chain
// shear(q) then swap then shear(p) then swap. deg q <= 1 keeps deg a_i <= i.
inline CorpusInstance corpus_components(const CorpusSpec& spec) {
  if (spec.m < 2) throw NonConformingInput("corpus m must be >= 2");
  if (static_cast<long>(spec.p.size()) != spec.m + 1 || !spec.p.back().is_one())
    throw NonConformingInput("p must be monic of degree m");
  if (spec.q.size() > 2) throw NonConformingInput("q must have degree <= 1");
  MPoly qx;
  for (std::size_t t = 0; t < spec.q.size(); ++t)
    qx += MPoly::monomial(spec.q[t], Var::x, static_cast<long>(t));
  MPoly s = MPoly::variable(Var::y) + qx;
  MPoly fpoly = MPoly::variable(Var::x);
  MPoly spow = MPoly::one();
  for (long t = 0; t <= spec.m; ++t) {
    fpoly += spec.p[static_cast<std::size_t>(t)] * spow;
    if (t < spec.m) spow *= s;
  }
  return CorpusInstance{curve_from_poly(fpoly), s};
}

struct ScanBudget {
  bool exhaustive = false;
  long samples = 0;          // used when not exhaustive
  std::uint64_t seed = 0;
};

struct ScanReport {
  long tested = 0;
  long b_pass = 0;
  long a_pass = 0;
  std::vector<CurveF> counterexamples;  // instances with B true and A false
};

// Enumerates f = y^m + a_2 y^{m-2} + ... + a_m (a_1 = 0) with deg a_i <= i
// and integer coefficients in [lo, hi], counting family A / family B passes
// and collecting any B-true A-false instance. Exhaustive mode walks the
// coefficient odometer in lexicographic order; sampled mode draws uniformly
// with a fixed seed.
inline ScanReport implication_scan(long m, long lo, long hi, const ScanBudget& budget) {
  if (m < 2 || m > 4) throw BudgetExceeded("scan supports m in {2, 3, 4}");
  if (lo > hi) throw NonConformingInput("empty coefficient range");
  if (budget.exhaustive && (m > 3 || hi - lo + 1 > 5))
    throw BudgetExceeded("exhaustive scan limited to m <= 3 and ranges of width <= 5");
  if (!budget.exhaustive && budget.samples <= 0)
    throw BudgetExceeded("sampled scan needs a positive sample count");

  std::vector<long> widths;  // coefficient slots: a_i has i+1, for i = 2..m
  for (long i = 2; i <= m; ++i)
    for (long d = 0; d <= i; ++d) widths.push_back(d);
  const std::size_t nslots = widths.size();

  auto make_curve = [&](const std::vector<long>& c) {
    std::vector<MPoly> a(static_cast<std::size_t>(m));
    std::size_t slot = 0;
    for (long i = 2; i <= m; ++i) {
      MPoly ai;
      for (long d = 0; d <= i; ++d)
        ai += MPoly::monomial(Rational(c[slot++]), Var::x, d);
      a[static_cast<std::size_t>(i - 1)] = ai;
    }
    return CurveF(m, std::move(a));
  };

  ScanReport rep;
  auto consider = [&](const std::vector<long>& c) {
    CurveF f = make_curve(c);
    bool B = theorem_B_holds(f);
    bool A = theorem_A_holds(f);
    ++rep.tested;
    if (B) ++rep.b_pass;
    if (A) ++rep.a_pass;
    if (B && !A) rep.counterexamples.push_back(f);
  };

  if (budget.exhaustive) {
    std::vector<long> c(nslots, lo);
    while (true) {
      consider(c);
      std::size_t t = nslots;
      while (t > 0 && c[t - 1] == hi) c[--t] = lo;
      if (t == 0) break;
      ++c[t - 1];
    }
  } else {
    std::mt19937_64 rng(budget.seed);
    std::uniform_int_distribution<long> pick(lo, hi);
    std::vector<long> c(nslots);
    for (long s = 0; s < budget.samples; ++s) {
      for (auto& ci : c) ci = pick(rng);
      consider(c);
    }
  }
  return rep;
}

}  // namespace keller
