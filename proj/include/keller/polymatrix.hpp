#pragma once

// Square matrices with polynomial entries. Two independent determinant
// algorithms (fraction-free elimination and memoized cofactor expansion),
// row replacement, and formal-degree Sylvester matrices / resultants.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "keller/errors.hpp"
#include "keller/mpoly.hpp"

namespace keller {

class PolyMatrix {
 public:
  explicit PolyMatrix(long n) : n_(n), e_(static_cast<std::size_t>(n * n)) {
    if (n < 0) throw Error("negative matrix size");
  }

  static PolyMatrix from_rows(const std::vector<std::vector<MPoly>>& rows) {
    PolyMatrix M(static_cast<long>(rows.size()));
    for (long i = 0; i < M.n_; ++i) {
      if (static_cast<long>(rows[i].size()) != M.n_)
        throw LengthMismatch("matrix rows of unequal length");
      for (long j = 0; j < M.n_; ++j) M.at(i, j) = rows[i][j];
    }
    return M;
  }

  long size() const { return n_; }

  MPoly& at(long i, long j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const MPoly& at(long i, long j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  long n_;
  std::vector<MPoly> e_;
};

// Fresh matrix with one row (1-based index) replaced.
inline PolyMatrix replace_row(const PolyMatrix& M, long row_index,
                              const std::vector<MPoly>& new_row) {
  if (row_index < 1 || row_index > M.size())
    throw IndexOutOfRange("row index " + std::to_string(row_index) +
                          " out of range for size " + std::to_string(M.size()));
  if (static_cast<long>(new_row.size()) != M.size())
    throw LengthMismatch("replacement row has length " + std::to_string(new_row.size()) +
                         ", expected " + std::to_string(M.size()));
  PolyMatrix R = M;
  for (long j = 0; j < M.size(); ++j) R.at(row_index - 1, j) = new_row[j];
  return R;
}

inline std::vector<MPoly> versor_row(long n, long one_at /*1-based*/) {
  if (one_at < 1 || one_at > n)
    throw IndexOutOfRange("versor position " + std::to_string(one_at) +
                          " out of range for size " + std::to_string(n));
  std::vector<MPoly> r(static_cast<std::size_t>(n));
  r[static_cast<std::size_t>(one_at - 1)] = MPoly::one();
  return r;
}

// Exact determinant by fraction-free (Bareiss) elimination: every division
// by the previous pivot is exact, entries stay polynomial throughout. Zero
// pivot columns are handled by row pivoting with sign tracking; a column
// with no pivot means determinant zero.
inline MPoly determinant(const PolyMatrix& M) {
  long n = M.size();
  if (n == 0) return MPoly::one();
  PolyMatrix A = M;
  int sign = 1;
  MPoly prev = MPoly::one();
  for (long k = 0; k < n; ++k) {
    long pivot = -1;
    for (long i = k; i < n; ++i) {
      if (A.at(i, k).is_zero()) continue;
      if (pivot < 0 || A.at(i, k).term_count() < A.at(pivot, k).term_count()) pivot = i;
    }
    if (pivot < 0) return MPoly::zero();
    if (pivot != k) {
      for (long j = k; j < n; ++j) std::swap(A.at(k, j), A.at(pivot, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j)
        A.at(i, j) = MPoly::div_exact(A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j), prev);
      A.at(i, k) = MPoly::zero();
    }
    prev = A.at(k, k);
  }
  return sign < 0 ? -A.at(n - 1, n - 1) : A.at(n - 1, n - 1);
}

// Independent oracle: cofactor expansion memoized over column subsets.
// Exponential state space, hence the size guard.
inline MPoly determinant_reference(const PolyMatrix& M) {
  long n = M.size();
  if (n > 8)
    throw SizeGuardExceeded("determinant_reference limited to size 8, got " + std::to_string(n));
  if (n == 0) return MPoly::one();
  std::unordered_map<std::uint32_t, MPoly> memo;
  // det of the minor spanned by rows r..n-1 and the columns set in mask
  auto rec = [&](auto&& self, long r, std::uint32_t mask) -> MPoly {
    if (r == n) return MPoly::one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    MPoly det;
    int sign = 1;
    for (long j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!M.at(r, j).is_zero())
        det += (sign > 0 ? M.at(r, j) : -M.at(r, j)) * self(self, r + 1, mask & ~(1u << j));
      sign = -sign;
    }
    memo.emplace(mask, det);
    return det;
  };
  return rec(rec, 0, (1u << n) - 1);
}

// Sylvester matrix of p and q in var with *formal* degrees dp, dq: zero
// leading coefficients are kept in place. dq shifted rows of p's coefficient
// vector (highest formal coefficient first) on top, then dp shifted rows of
// q's. True degrees above the formal ones are rejected.
inline PolyMatrix sylvester(const MPoly& p, const MPoly& q, Var var, long dp, long dq) {
  if (dp < 0 || dq < 0) throw Error("negative formal degree");
  if (p.degree_in(var) > dp)
    throw DegreeExceedsFormal("degree of first argument exceeds formal degree " +
                              std::to_string(dp));
  if (q.degree_in(var) > dq)
    throw DegreeExceedsFormal("degree of second argument exceeds formal degree " +
                              std::to_string(dq));
  auto coeffs_desc = [&](const MPoly& f, long d) {
    std::vector<MPoly> cs(static_cast<std::size_t>(d) + 1);
    auto asc = f.coefficients_in(var);
    for (std::size_t e = 0; e < asc.size(); ++e)
      cs[static_cast<std::size_t>(d) - e] = asc[e];
    return cs;
  };
  std::vector<MPoly> pc = coeffs_desc(p, dp), qc = coeffs_desc(q, dq);
  PolyMatrix S(dp + dq);
  for (long t = 0; t < dq; ++t)
    for (long j = 0; j <= dp; ++j) S.at(t, t + j) = pc[static_cast<std::size_t>(j)];
  for (long t = 0; t < dp; ++t)
    for (long j = 0; j <= dq; ++j) S.at(dq + t, t + j) = qc[static_cast<std::size_t>(j)];
  return S;
}

// Determinant of the Sylvester matrix; with dp, dq the true degrees this is
// the classical resultant.
inline MPoly resultant(const MPoly& p, const MPoly& q, Var var, long dp, long dq) {
  return determinant(sylvester(p, q, var, dp, dq));
}

}  // namespace keller
