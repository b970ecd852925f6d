#pragma once

// Monic-in-y curves f = y^m + a_1(x) y^{m-1} + ... + a_m(x), the main
// assumption checks, the a_1-killing normalization, and the matrix M built
// from f'_x and f'_y with formal y-degrees (m-1, m-1).

#include <string>
#include <utility>
#include <vector>

#include "keller/errors.hpp"
#include "keller/mpoly.hpp"
#include "keller/polymatrix.hpp"
#include "keller/rational.hpp"

namespace keller {

struct CurveF {
  long m = 0;
  std::vector<MPoly> a;  // a[i-1] holds a_i

  CurveF(long m_, std::vector<MPoly> a_) : m(m_), a(std::move(a_)) {
    if (m < 2) throw NonConformingInput("curve degree m must be >= 2");
    if (static_cast<long>(a.size()) != m)
      throw LengthMismatch("expected " + std::to_string(m) + " coefficients, got " +
                           std::to_string(a.size()));
    for (long i = 0; i < m; ++i)
      if (a[i].has_var(Var::y) || a[i].has_var(Var::u) || a[i].has_var(Var::v))
        throw NonConformingInput("coefficient a_" + std::to_string(i + 1) +
                                 " must involve x only");
  }

  MPoly as_poly() const {
    MPoly f = MPoly::monomial(Rational(1), Var::y, m);
    for (long i = 1; i <= m; ++i)
      f += a[static_cast<std::size_t>(i - 1)] * MPoly::monomial(Rational(1), Var::y, m - i);
    return f;
  }

  MPoly fx() const { return as_poly().derivative(Var::x); }
  MPoly fy() const { return as_poly().derivative(Var::y); }
};

// Extracts a CurveF from a polynomial in x, y: requires y-degree >= 2 and a
// monic leading y-coefficient. A nonzero constant leading coefficient is
// scaled away with a warning; anything else is rejected.
inline CurveF curve_from_poly(const MPoly& p, std::vector<std::string>* warnings = nullptr) {
  if (p.has_var(Var::u) || p.has_var(Var::v))
    throw NonConformingInput("curve input may involve x and y only");
  long m = p.degree_in(Var::y);
  if (m < 2) throw NotMonicInY("y-degree must be at least 2, got " + std::to_string(m));
  auto cs = p.coefficients_in(Var::y);
  MPoly lead = cs[static_cast<std::size_t>(m)];
  if (lead != MPoly::one()) {
    if (!lead.is_constant())
      throw NotMonicInY("leading y-coefficient is not constant: " + lead.to_string());
    Rational c = lead.as_constant();
    if (warnings)
      warnings->push_back("leading y-coefficient " + c.to_string() + " scaled to 1");
    Rational inv = Rational(1) / c;
    for (auto& ck : cs) ck = ck * inv;
  }
  std::vector<MPoly> a;
  for (long i = 1; i <= m; ++i) a.push_back(cs[static_cast<std::size_t>(m - i)]);
  return CurveF(m, std::move(a));
}

struct AssumptionsReport {
  bool monic_form_ok = false;
  bool degree_bounds_ok = false;   // deg a_i <= i
  bool reduced_all_lambda = false;  // f - lambda squarefree for every lambda
  MPoly bad_lambda_gcd;             // monic, in v standing for lambda; 1 when none
  std::vector<Rational> bad_lambda_roots;
  bool dy_fx_positive = false;      // deg_y f'_x > 0

  bool all_ok() const {
    return monic_form_ok && degree_bounds_ok && reduced_all_lambda && dy_fx_positive;
  }
};

namespace detail {

// Rational roots of a nonconstant univariate polynomial (in w) with rational
// coefficients, by the rational root test on the integer-scaled form.
// Divisor enumeration bails out on huge end coefficients; callers treat the
// result as best-effort reporting.
inline std::vector<Rational> rational_roots(const MPoly& g, Var w) {
  std::vector<Rational> roots;
  auto cs = g.coefficients_in(w);
  if (cs.size() < 2) return roots;
  mpz_class scale = 1;
  for (const auto& c : cs) {
    mpz_class den = c.as_constant().den();
    scale = scale / gcd(scale, den) * den;
  }
  std::vector<mpz_class> z;
  for (const auto& c : cs) {
    Rational r = c.as_constant() * Rational(scale);
    z.push_back(r.num());
  }
  std::size_t low = 0;
  while (low < z.size() - 1 && z[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  mpz_class z0 = abs(z[low]), zd = abs(z.back());
  if (z0 > 1000000000 || zd > 1000000000) return roots;  // report what we have
  auto divisors = [](const mpz_class& n) {
    std::vector<long> ds;
    long v = n.get_si();
    for (long d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        ds.push_back(d);
        if (d != v / d) ds.push_back(v / d);
      }
    return ds;
  };
  auto eval_zero = [&](const Rational& r) {
    Rational acc(0);
    for (std::size_t k = z.size(); k-- > low;) acc = acc * r + Rational(z[k]);
    return acc.is_zero();
  };
  for (long p : divisors(z0))
    for (long q : divisors(zd))
      for (int s : {1, -1}) {
        Rational cand(s * p, q);
        bool seen = false;
        for (const auto& r : roots) seen = seen || r == cand;
        if (!seen && eval_zero(cand)) roots.push_back(cand);
      }
  return roots;
}

}  // namespace detail

// Main assumptions: (1) monic in y of degree m >= 2 with deg a_i <= i,
// (2) f - lambda reduced for every constant lambda, (3) deg_y f'_x > 0.
// Reducedness is decided exactly: D(x,lambda) = resultant_y(f - lambda, f'_y)
// with true degrees, G = monic gcd of D's x-coefficients (polynomials in
// lambda); f - lambda_0 has a repeated factor iff D(., lambda_0) vanishes
// identically, so reduced-for-all iff deg G = 0. The variable v stands in
// for lambda.
inline AssumptionsReport check_main_assumptions(const CurveF& f) {
  AssumptionsReport rep;
  rep.monic_form_ok = true;  // enforced by the CurveF representation
  rep.degree_bounds_ok = true;
  for (long i = 1; i <= f.m; ++i)
    rep.degree_bounds_ok =
        rep.degree_bounds_ok && f.a[static_cast<std::size_t>(i - 1)].degree_in(Var::x) <= i;

  MPoly fv = f.as_poly() - MPoly::variable(Var::v);
  MPoly D = resultant(fv, f.fy(), Var::y, f.m, f.m - 1);
  MPoly G;
  for (const MPoly& c : D.coefficients_in(Var::x)) G = gcd_univariate(G, c, Var::v);
  rep.bad_lambda_gcd = G;
  rep.reduced_all_lambda = !D.is_zero() && G.degree_in(Var::v) <= 0;
  if (!rep.reduced_all_lambda) rep.bad_lambda_roots = detail::rational_roots(G, Var::v);

  rep.dy_fx_positive = f.fx().degree_in(Var::y) > 0;
  return rep;
}

// f(x, y - a_1(x)/m): the triangular shift that kills a_1.
inline CurveF normalize_a1(const CurveF& f) {
  MPoly shift = MPoly::variable(Var::y) - f.a[0] * Rational(1, f.m);
  return curve_from_poly(f.as_poly().substitute(Var::y, shift));
}

struct MatrixM {
  PolyMatrix matrix;
  long m = 0;
  long k_vanish = 0;  // largest k with a'_1 = ... = a'_k = 0; m when f'_x = 0
};

// M = Sylvester matrix of (f'_x, f'_y) in y with formal degrees (m-1, m-1):
// m-1 shifted rows of (a'_1, ..., a'_m), then m-1 shifted rows of
// (m, (m-1)a_1, ..., a_{m-1}). Formal zero leading coefficients stay.
inline MatrixM build_M(const CurveF& f) {
  MatrixM r{sylvester(f.fx(), f.fy(), Var::y, f.m - 1, f.m - 1), f.m, 0};
  while (r.k_vanish < f.m &&
         f.a[static_cast<std::size_t>(r.k_vanish)].derivative(Var::x).is_zero())
    ++r.k_vanish;
  return r;
}

struct DetResReport {
  long k = 0;
  bool holds = false;
  MPoly detM;
  MPoly res;  // true-degree resultant of (f'_x, f'_y) in y
};

// det M = (-1)^{k(m+1)} m^k R_y(f'_x, f'_y) with k = k_vanish; the factor is
// exactly the discrepancy between the formal-degree and true-degree Sylvester
// matrices. Undefined when f'_x = 0 (the true-degree resultant degenerates).
inline DetResReport check_detM_resultant(const CurveF& f) {
  MPoly fx = f.fx();
  if (fx.is_zero()) throw ZeroPartialX("f'_x = 0: det M / resultant relation skipped");
  MatrixM M = build_M(f);
  DetResReport rep;
  rep.k = M.k_vanish;
  rep.detM = determinant(M.matrix);
  rep.res = resultant(fx, f.fy(), Var::y, fx.degree_in(Var::y), f.m - 1);
  Rational factor(1);
  for (long t = 0; t < rep.k; ++t) factor *= Rational(f.m);
  if ((rep.k * (f.m + 1)) % 2 != 0) factor = -factor;
  rep.holds = rep.detM == rep.res * factor;
  return rep;
}

// Jac(p, q) = p'_x q'_y - p'_y q'_x for p, q in x and y only.
inline MPoly jacobian(const MPoly& p, const MPoly& q) {
  if (p.has_var(Var::u) || p.has_var(Var::v) || q.has_var(Var::u) || q.has_var(Var::v))
    throw NonConformingInput("jacobian arguments must involve x and y only");
  return p.derivative(Var::x) * q.derivative(Var::y) -
         p.derivative(Var::y) * q.derivative(Var::x);
}

}  // namespace keller
