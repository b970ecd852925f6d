#pragma once

// Deterministic random generators shared across the test binaries. Seeds are
// fixed in each test so failures reproduce.

#include <random>
#include <vector>

#include "keller/curve.hpp"
#include "keller/mpoly.hpp"
#include "keller/polymatrix.hpp"
#include "keller/rational.hpp"

namespace testgen {

using keller::CurveF;
using keller::MPoly;
using keller::PolyMatrix;
using keller::Rational;
using keller::Var;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  }
  Rational rational(long lo, long hi, long maxden = 4) {
    return Rational(pick(lo, hi), pick(1, maxden));
  }
};

// Sparse polynomial in the given variables, total degree <= maxdeg.
inline MPoly random_mpoly(Rng& rng, const std::vector<Var>& vars, long maxdeg, long nterms,
                          long lo = -4, long hi = 4) {
  MPoly p;
  for (long t = 0; t < nterms; ++t) {
    long es[4] = {0, 0, 0, 0};
    long budget = rng.pick(0, maxdeg);
    for (Var w : vars) {
      long e = rng.pick(0, budget);
      es[static_cast<int>(w)] = e;
      budget -= e;
    }
    p += MPoly::monomial(rng.rational(lo, hi), es[0], es[1], es[2], es[3]);
  }
  return p;
}

// Dense-ish univariate polynomial of degree <= deg with integer coefficients.
inline MPoly random_univariate(Rng& rng, Var w, long deg, long lo, long hi) {
  MPoly p;
  for (long e = 0; e <= deg; ++e)
    p += MPoly::monomial(Rational(rng.pick(lo, hi)), w, e);
  return p;
}

// Monic curve with integer coefficients, deg a_i <= i + slack.
inline CurveF random_curve(Rng& rng, long m, long lo, long hi, long slack = 0) {
  std::vector<MPoly> a;
  for (long i = 1; i <= m; ++i)
    a.push_back(random_univariate(rng, Var::x, i + slack, lo, hi));
  return CurveF(m, std::move(a));
}

inline PolyMatrix random_matrix(Rng& rng, long n, long maxdeg, long nterms) {
  PolyMatrix M(n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      M.at(i, j) = random_mpoly(rng, {Var::x, Var::y, Var::u, Var::v}, maxdeg, nterms, -3, 3);
  return M;
}

}  // namespace testgen
