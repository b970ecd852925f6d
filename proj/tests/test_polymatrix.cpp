#include <catch2/catch_amalgamated.hpp>

#include "keller/errors.hpp"
#include "keller/polymatrix.hpp"
#include "tests/support/generators.hpp"

using keller::DegreeExceedsFormal;
using keller::IndexOutOfRange;
using keller::LengthMismatch;
using keller::MPoly;
using keller::PolyMatrix;
using keller::Rational;
using keller::SizeGuardExceeded;
using keller::Var;
using testgen::random_matrix;
using testgen::Rng;

static MPoly c(long v) { return MPoly::constant(Rational(v)); }
static MPoly X = MPoly::variable(Var::x);
static MPoly Y = MPoly::variable(Var::y);

TEST_CASE("construction and row replacement") {
  PolyMatrix M = PolyMatrix::from_rows({{c(1), c(2)}, {c(3), c(4)}});
  CHECK(M.size() == 2);
  CHECK(M.at(1, 0) == c(3));

  auto R = keller::replace_row(M, 2, keller::versor_row(2, 1));
  CHECK(R.at(1, 0) == c(1));
  CHECK(R.at(1, 1) == c(0));
  CHECK(M.at(1, 0) == c(3));  // original untouched

  CHECK_THROWS_AS(keller::replace_row(M, 0, keller::versor_row(2, 1)), IndexOutOfRange);
  CHECK_THROWS_AS(keller::replace_row(M, 3, keller::versor_row(2, 1)), IndexOutOfRange);
  CHECK_THROWS_AS(keller::replace_row(M, 1, {c(1)}), LengthMismatch);
  CHECK_THROWS_AS(keller::versor_row(2, 3), IndexOutOfRange);
  CHECK_THROWS_AS(PolyMatrix::from_rows({{c(1), c(2)}, {c(3)}}), LengthMismatch);
}

TEST_CASE("determinant hand values") {
  CHECK(keller::determinant(PolyMatrix(0)) == c(1));
  CHECK(keller::determinant(PolyMatrix::from_rows({{X}})) == X);
  CHECK(keller::determinant(PolyMatrix::from_rows({{c(1), c(2)}, {c(3), c(4)}})) == c(-2));
  CHECK(keller::determinant(PolyMatrix::from_rows({{X, c(1)}, {c(1), X}})) ==
        X * X - MPoly::one());
  // singular polynomial matrix
  CHECK(keller::determinant(PolyMatrix::from_rows({{X, X * X}, {c(1), X}})).is_zero());
  // 3x3 with a zero pivot position up front
  PolyMatrix A = PolyMatrix::from_rows(
      {{c(0), c(1), c(2)}, {c(1), c(0), c(3)}, {c(4), c(5), c(6)}});
  CHECK(keller::determinant(A) == c(16));
  CHECK(keller::determinant_reference(A) == c(16));
}

TEST_CASE("fraction free and cofactor determinants agree") {
  Rng rng(880001);
  for (int t = 0; t < 120; ++t) {
    long n = rng.pick(1, 5);
    PolyMatrix M = random_matrix(rng, n, 2, 2);
    CHECK(keller::determinant(M) == keller::determinant_reference(M));
  }
}

TEST_CASE("determinant alternating properties") {
  Rng rng(880002);
  for (int t = 0; t < 40; ++t) {
    long n = rng.pick(2, 4);
    PolyMatrix M = random_matrix(rng, n, 2, 2);
    long i = rng.pick(0, n - 1);
    long j = (i + 1 + rng.pick(0, n - 2)) % n;

    // duplicate a row: determinant vanishes
    PolyMatrix D = M;
    for (long k = 0; k < n; ++k) D.at(j, k) = D.at(i, k);
    CHECK(keller::determinant(D).is_zero());

    // swap two rows: determinant negates
    PolyMatrix S = M;
    for (long k = 0; k < n; ++k) std::swap(S.at(i, k), S.at(j, k));
    CHECK(keller::determinant(S) == -keller::determinant(M));
  }
}

TEST_CASE("determinant is multiplicative") {
  Rng rng(880003);
  for (int t = 0; t < 25; ++t) {
    long n = rng.pick(2, 3);
    PolyMatrix A = random_matrix(rng, n, 1, 2);
    PolyMatrix B = random_matrix(rng, n, 1, 2);
    PolyMatrix P(n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k) P.at(i, j) += A.at(i, k) * B.at(k, j);
    CHECK(keller::determinant(P) == keller::determinant(A) * keller::determinant(B));
  }
}

TEST_CASE("cofactor determinant size guard") {
  CHECK_THROWS_AS(keller::determinant_reference(PolyMatrix(9)), SizeGuardExceeded);
}

TEST_CASE("sylvester layout for linear pair") {
  MPoly p = X * Y + c(2);        // x*y + 2
  MPoly q = c(3) * Y + X * X;    // 3*y + x^2
  PolyMatrix S = keller::sylvester(p, q, Var::y, 1, 1);
  REQUIRE(S.size() == 2);
  CHECK(S.at(0, 0) == X);
  CHECK(S.at(0, 1) == c(2));
  CHECK(S.at(1, 0) == c(3));
  CHECK(S.at(1, 1) == X * X);
  CHECK(keller::resultant(p, q, Var::y, 1, 1) == X * X * X - c(6));
}

TEST_CASE("sylvester rejects degree overflow") {
  CHECK_THROWS_AS(keller::sylvester(Y * Y, Y, Var::y, 1, 1), DegreeExceedsFormal);
  CHECK_THROWS_AS(keller::sylvester(Y, Y * Y, Var::y, 1, 1), DegreeExceedsFormal);
}

TEST_CASE("resultant against a constant") {
  // with formal degrees (d, 0) the matrix is diag of the constant
  CHECK(keller::resultant(Y * Y * Y + X, c(5), Var::y, 3, 0) == c(125));
}

TEST_CASE("resultant swap symmetry") {
  Rng rng(880004);
  for (int t = 0; t < 25; ++t) {
    long dp = rng.pick(1, 3), dq = rng.pick(1, 3);
    MPoly p = MPoly::monomial(Rational(rng.pick(1, 3)), Var::y, dp);
    MPoly q = MPoly::monomial(Rational(rng.pick(1, 3)), Var::y, dq);
    for (long e = 0; e < dp; ++e)
      p += MPoly::monomial(Rational(rng.pick(-3, 3)), Var::y, e) *
           MPoly::monomial(Rational(1), Var::x, rng.pick(0, 2));
    for (long e = 0; e < dq; ++e)
      q += MPoly::monomial(Rational(rng.pick(-3, 3)), Var::y, e) *
           MPoly::monomial(Rational(1), Var::x, rng.pick(0, 2));
    MPoly lhs = keller::resultant(p, q, Var::y, dp, dq);
    MPoly rhs = keller::resultant(q, p, Var::y, dq, dp);
    if ((dp * dq) % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("resultant is multiplicative in the first slot") {
  Rng rng(880005);
  for (int t = 0; t < 20; ++t) {
    auto mk = [&](long d) {
      MPoly r = MPoly::monomial(Rational(1), Var::y, d);
      for (long e = 0; e < d; ++e)
        r += MPoly::monomial(Rational(rng.pick(-2, 2)), Var::y, e) *
             MPoly::monomial(Rational(1), Var::x, rng.pick(0, 1));
      return r;
    };
    long d1 = rng.pick(1, 2), d2 = rng.pick(1, 2), dq = rng.pick(1, 2);
    MPoly p1 = mk(d1), p2 = mk(d2), q = mk(dq);
    CHECK(keller::resultant(p1 * p2, q, Var::y, d1 + d2, dq) ==
          keller::resultant(p1, q, Var::y, d1, dq) * keller::resultant(p2, q, Var::y, d2, dq));
  }
}

TEST_CASE("resultant detects a shared root") {
  MPoly common = Y - X;
  MPoly p = common * (Y + c(1));
  MPoly q = common * (Y - c(2));
  CHECK(keller::resultant(p, q, Var::y, 2, 2).is_zero());
}
