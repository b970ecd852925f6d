#pragma once

// The two identity families characterizing automorphism components (family A)
// and Keller components with deg_y g <= m (family B), the Q-resultant
// component oracle, the Cramer-rule reconstruction of the associated g, and
// the closed-form m = 3 specializations.
//
// Conventions, fixed once for the whole library:
//  - M is the formal-degree Sylvester matrix of (f'_x, f'_y); see curve.hpp.
//  - Family A replaces top-block row r by the versor with 1 at column m+r-1
//    and bottom-block row (m-1)+s by the versor with 1 at column m+s-1
//    (1-based), i.e. the column of that row's last structural entry.
//  - Family B uses D1_t (top row t -> versor at the last column 2m-2) and
//    D2_t (bottom row (m-1)+(t-1) -> same versor).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "keller/curve.hpp"
#include "keller/errors.hpp"
#include "keller/mpoly.hpp"
#include "keller/polymatrix.hpp"
#include "keller/rational.hpp"

namespace keller {

struct IdentityAIndex {
  long k = 0, i = 0, j = 0;  // 1 <= k <= m-1, i + j = k - 1
};

struct IdentityReport {
  char family = 'A';
  long k = 0;
  std::optional<long> i, j;  // set for family A only
  MPoly residual;
  bool holds = false;
};

struct TheoremReport {
  std::vector<IdentityReport> identities;
  bool verdict = false;
};

namespace detail {

inline void check_subset(const std::vector<long>& set, long m, const char* which) {
  for (std::size_t t = 0; t < set.size(); ++t) {
    if (set[t] < 1 || set[t] > m - 1)
      throw IndexOutOfRange(std::string(which) + " entry " + std::to_string(set[t]) +
                            " outside 1.." + std::to_string(m - 1));
    if (t > 0 && set[t] <= set[t - 1])
      throw IndexOutOfRange(std::string(which) + " must be strictly ascending");
  }
}

inline MPoly a_term(const MatrixM& M, const std::vector<long>& rset,
                    const std::vector<long>& sset) {
  PolyMatrix A = M.matrix;
  long n = M.matrix.size();
  for (long r : rset) {
    std::vector<MPoly> row = versor_row(n, M.m + r - 1);
    for (long j = 0; j < n; ++j) A.at(r - 1, j) = row[static_cast<std::size_t>(j)];
  }
  for (long s : sset) {
    std::vector<MPoly> row = versor_row(n, M.m + s - 1);
    for (long j = 0; j < n; ++j) A.at((M.m - 1) + s - 1, j) = row[static_cast<std::size_t>(j)];
  }
  return determinant(A);
}

inline bool intersects(const std::vector<long>& a, const std::vector<long>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

// Ascending size-c subsets of {1..m-1}, lexicographic.
inline std::vector<std::vector<long>> subsets(long m, long c) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(static_cast<std::size_t>(c));
  for (long t = 0; t < c; ++t) cur[static_cast<std::size_t>(t)] = t + 1;
  if (c > m - 1) return out;  // none
  while (true) {
    out.push_back(cur);
    long t = c - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == m - 1 - (c - 1 - t)) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (long s = t + 1; s < c; ++s)
      cur[static_cast<std::size_t>(s)] = cur[static_cast<std::size_t>(s - 1)] + 1;
  }
  return out;
}

// Residual of the family-A identity (k, i, j): k-th x-derivative of the sum
// of replaced determinants over ascending index subsets. Pairs sharing an
// index contribute identical versor rows, hence determinant zero; they are
// skipped unless include_overlapping asks for the literal sum.
inline MPoly a_residual(const MatrixM& M, long k, long i, long j, bool include_overlapping) {
  MPoly sum;
  for (const auto& rset : subsets(M.m, i))
    for (const auto& sset : subsets(M.m, j)) {
      if (!include_overlapping && intersects(rset, sset)) continue;
      sum += a_term(M, rset, sset);
    }
  for (long t = 0; t < k; ++t) sum = sum.derivative(Var::x);
  return sum;
}

inline MPoly d1(const MatrixM& M, long t) {
  PolyMatrix A = M.matrix;
  long n = M.matrix.size();
  std::vector<MPoly> row = versor_row(n, n);
  for (long j = 0; j < n; ++j) A.at(t - 1, j) = row[static_cast<std::size_t>(j)];
  return determinant(A);
}

inline MPoly d2(const MatrixM& M, long t) {
  PolyMatrix A = M.matrix;
  long n = M.matrix.size();
  std::vector<MPoly> row = versor_row(n, n);
  for (long j = 0; j < n; ++j) A.at((M.m - 1) + (t - 1) - 1, j) = row[static_cast<std::size_t>(j)];
  return determinant(A);
}

// Residual of the family-B identity at k: d/dx(det M) for k = 0, d/dx(D1_1)
// for k = 1 (the first coefficient has zero derivative), and
// d/dx(D1_k) + (m-k) D2_k for k >= 2.
inline MPoly b_residual(const MatrixM& M, long k) {
  if (k == 0) return determinant(M.matrix).derivative(Var::x);
  if (k == 1) return d1(M, 1).derivative(Var::x);
  return d1(M, k).derivative(Var::x) + d2(M, k) * Rational(M.m - k);
}

}  // namespace detail

// One summand of family A: det of M with the chosen top rows r in rset and
// bottom rows (m-1)+s for s in sset replaced by their versors.
inline MPoly identity_A_term(const CurveF& f, const std::vector<long>& rset,
                             const std::vector<long>& sset) {
  detail::check_subset(rset, f.m, "rset");
  detail::check_subset(sset, f.m, "sset");
  return detail::a_term(build_M(f), rset, sset);
}

inline IdentityReport check_identity_A(const CurveF& f, const IdentityAIndex& idx,
                                       bool include_overlapping = false) {
  if (idx.k < 1 || idx.k > f.m - 1 || idx.i < 0 || idx.j < 0 || idx.i + idx.j != idx.k - 1)
    throw BadIndex("family A index (k=" + std::to_string(idx.k) + ", i=" + std::to_string(idx.i) +
                   ", j=" + std::to_string(idx.j) + ") invalid for m=" + std::to_string(f.m));
  IdentityReport rep;
  rep.family = 'A';
  rep.k = idx.k;
  rep.i = idx.i;
  rep.j = idx.j;
  rep.residual = detail::a_residual(build_M(f), idx.k, idx.i, idx.j, include_overlapping);
  rep.holds = rep.residual.is_zero();
  return rep;
}

inline TheoremReport check_theorem_A(const CurveF& f, bool include_overlapping = false) {
  MatrixM M = build_M(f);
  TheoremReport rep;
  rep.verdict = true;
  for (long k = 1; k <= f.m - 1; ++k)
    for (long i = 0; i <= k - 1; ++i) {
      IdentityReport r;
      r.family = 'A';
      r.k = k;
      r.i = i;
      r.j = k - 1 - i;
      r.residual = detail::a_residual(M, k, i, k - 1 - i, include_overlapping);
      r.holds = r.residual.is_zero();
      rep.verdict = rep.verdict && r.holds;
      rep.identities.push_back(std::move(r));
    }
  return rep;
}

// Verdict-only fast path (early exit), used by scans.
inline bool theorem_A_holds(const CurveF& f) {
  MatrixM M = build_M(f);
  for (long k = 1; k <= f.m - 1; ++k)
    for (long i = 0; i <= k - 1; ++i)
      if (!detail::a_residual(M, k, i, k - 1 - i, false).is_zero()) return false;
  return true;
}

struct QData {
  MPoly Q;                 // in x, u, v
  long N = 0;              // deg_x Q
  std::vector<MPoly> Qk;   // Q_0..Q_N, each in u, v
};

// Q(x,u,v) = det of M with a'_m -> a'_m - u in every top-block row and
// a_{m-1} -> a_{m-1} - v in every bottom-block row, i.e. the formal-degree
// resultant R_y(f'_x - u, f'_y - v) with the constant pinned to 1.
inline QData build_Q(const CurveF& f) {
  MatrixM M = build_M(f);
  long m = f.m;
  for (long t = 0; t < m - 1; ++t) {
    M.matrix.at(t, t + m - 1) -= MPoly::variable(Var::u);
    M.matrix.at((m - 1) + t, t + m - 1) -= MPoly::variable(Var::v);
  }
  QData q;
  q.Q = determinant(M.matrix);
  if (q.Q.is_zero())
    throw DegenerateQ("Q(x,u,v) vanishes identically; main assumptions are badly violated");
  q.N = q.Q.degree_in(Var::x);
  q.Qk = q.Q.coefficients_in(Var::x);
  return q;
}

struct QOracleReport {
  bool component = false;
  std::vector<std::optional<long>> orders;  // order at origin of Q_0..Q_N; nullopt = +inf
  QData q;
};

// Component oracle: f is a component of an automorphism iff
// ord_{(0,0)} Q_0 = 0 and ord_{(0,0)} Q_i >= i for i = 1..N.
inline QOracleReport component_oracle_Q(const CurveF& f) {
  QOracleReport rep;
  rep.q = build_Q(f);
  rep.component = true;
  for (long i = 0; i <= rep.q.N; ++i) {
    auto ord = rep.q.Qk[static_cast<std::size_t>(i)].order_at_origin();
    rep.orders.push_back(ord);
    if (i == 0)
      rep.component = rep.component && ord.has_value() && *ord == 0;
    else
      rep.component = rep.component && (!ord.has_value() || *ord >= i);
  }
  return rep;
}

inline IdentityReport identity_B(const CurveF& f, long k) {
  if (k < 0 || k > f.m - 1)
    throw BadIndex("family B index k=" + std::to_string(k) + " outside 0.." +
                   std::to_string(f.m - 1));
  IdentityReport rep;
  rep.family = 'B';
  rep.k = k;
  rep.residual = detail::b_residual(build_M(f), k);
  rep.holds = rep.residual.is_zero();
  return rep;
}

inline TheoremReport check_theorem_B(const CurveF& f) {
  MatrixM M = build_M(f);
  TheoremReport rep;
  rep.verdict = true;
  for (long k = 0; k <= f.m - 1; ++k) {
    IdentityReport r;
    r.family = 'B';
    r.k = k;
    r.residual = detail::b_residual(M, k);
    r.holds = r.residual.is_zero();
    rep.verdict = rep.verdict && r.holds;
    rep.identities.push_back(std::move(r));
  }
  return rep;
}

inline bool theorem_B_holds(const CurveF& f) {
  MatrixM M = build_M(f);
  for (long k = 0; k <= f.m - 1; ++k)
    if (!detail::b_residual(M, k).is_zero()) return false;
  return true;
}

struct AssociatedG {
  std::vector<MPoly> b;  // b_1..b_m, each in x
  MPoly g;               // b_1 y^{m-1} + ... + b_m
  Rational jac_value;    // always 1 on success
  Rational R;            // the constant det M
};

// Cramer-rule reconstruction: R = det M must be a nonzero constant;
// b_i = D1_i / ((m-i) R) for i = 1..m-1, b~_j = -D2_j / R for j = 2..m,
// b_m = antiderivative of b~_m (constant 0), g = sum b_i y^{m-i}. The
// derivative consistency b'_i = b~_i and Jac(f, g) = 1 are verified exactly.
inline AssociatedG construct_associated(const CurveF& f) {
  MatrixM M = build_M(f);
  MPoly detM = determinant(M.matrix);
  if (detM.is_zero() || !detM.is_constant())
    throw NotKeller("det M = " + detM.to_string() + " is not a nonzero constant");
  Rational R = detM.as_constant();
  long m = f.m;

  std::vector<MPoly> b(static_cast<std::size_t>(m));
  std::vector<MPoly> btilde(static_cast<std::size_t>(m) + 1);  // b~_1..b~_m, 1-based
  btilde[1] = MPoly::zero();
  for (long j = 2; j <= m; ++j)
    btilde[static_cast<std::size_t>(j)] = -detail::d2(M, j) * (Rational(1) / R);
  for (long i = 1; i <= m - 1; ++i)
    b[static_cast<std::size_t>(i - 1)] = detail::d1(M, i) * (Rational(1) / (Rational(m - i) * R));
  b[static_cast<std::size_t>(m - 1)] = btilde[static_cast<std::size_t>(m)].antiderivative(Var::x);

  for (long i = 1; i <= m - 1; ++i)
    if (b[static_cast<std::size_t>(i - 1)].derivative(Var::x) != btilde[static_cast<std::size_t>(i)])
      throw ReconstructionMismatch("b'_" + std::to_string(i) + " differs from the row-" +
                                   std::to_string(i) + " solution of the coefficient system");

  AssociatedG out;
  out.b = b;
  out.R = R;
  for (long i = 1; i <= m; ++i)
    out.g += b[static_cast<std::size_t>(i - 1)] * MPoly::monomial(Rational(1), Var::y, m - i);
  MPoly jac = jacobian(f.as_poly(), out.g);
  if (jac != MPoly::one())
    throw ReconstructionMismatch("Jac(f, g) = " + jac.to_string() + ", expected 1");
  out.jac_value = Rational(1);
  return out;
}

struct M3Report {
  bool A3 = false, B3 = false;
  MPoly w_residual;    // ((a'_2)^2 a_2 + 3 (a'_3)^2)'
  MPoly a2_residual;   // a''_2
  MPoly a3_residual_A; // a'''_3
  MPoly a3_residual_B; // a''_3
};

// Closed forms for m = 3 with a_1 = 0: family A holds iff
// ((a'_2)^2 a_2 + 3 (a'_3)^2)' = 0, a''_2 = 0 and a'''_3 = 0; family B asks
// a''_3 = 0 in place of a'''_3 = 0.
inline M3Report identities_m3(const MPoly& a2, const MPoly& a3) {
  for (const MPoly* p : {&a2, &a3})
    if (p->has_var(Var::y) || p->has_var(Var::u) || p->has_var(Var::v))
      throw NonConformingInput("m=3 coefficients must involve x only");
  MPoly d2 = a2.derivative(Var::x), d3 = a3.derivative(Var::x);
  MPoly W = d2 * d2 * a2 + Rational(3) * d3 * d3;
  M3Report rep;
  rep.w_residual = W.derivative(Var::x);
  rep.a2_residual = d2.derivative(Var::x);
  rep.a3_residual_B = d3.derivative(Var::x);
  rep.a3_residual_A = rep.a3_residual_B.derivative(Var::x);
  rep.A3 = rep.w_residual.is_zero() && rep.a2_residual.is_zero() && rep.a3_residual_A.is_zero();
  rep.B3 = rep.w_residual.is_zero() && rep.a2_residual.is_zero() && rep.a3_residual_B.is_zero();
  return rep;
}

}  // namespace keller
