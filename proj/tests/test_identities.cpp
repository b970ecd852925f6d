#include <catch2/catch_amalgamated.hpp>

#include "keller/curve.hpp"
#include "keller/errors.hpp"
#include "keller/identities.hpp"
#include "keller/parse.hpp"
#include "tests/support/generators.hpp"

using keller::BadIndex;
using keller::CurveF;
using keller::IdentityAIndex;
using keller::IndexOutOfRange;
using keller::MPoly;
using keller::NotKeller;
using keller::Rational;
using keller::ReconstructionMismatch;
using keller::Var;
using testgen::Rng;

static CurveF curve(const std::string& s) { return keller::parse_curve(s); }
static MPoly poly(const std::string& s) { return keller::parse_poly(s); }

// det M = 9 is constant here, yet the curve factors as (y - x)(y^2 + x*y - 2*x^2 + 1),
// so it cannot be a component; the k >= 1 identities catch it.
static const char* kReducibleWitness = "y^3 - 3*x^2*y + y + 2*x^3 - x";

TEST_CASE("summands of family A on y^3 + x") {
  CurveF f = curve("y^3 + x");
  CHECK(keller::identity_A_term(f, {1}, {}) == poly("9"));
  CHECK(keller::identity_A_term(f, {}, {1}) == poly("0"));
  CHECK(keller::identity_A_term(f, {}, {}) == poly("9"));  // det M itself
  CHECK_THROWS_AS(keller::identity_A_term(f, {3}, {}), IndexOutOfRange);
  CHECK_THROWS_AS(keller::identity_A_term(f, {2, 1}, {}), IndexOutOfRange);  // not ascending
}

TEST_CASE("single family A identity") {
  auto rep = keller::check_identity_A(curve("y^2 + x^2"), IdentityAIndex{1, 0, 0});
  CHECK(rep.family == 'A');
  CHECK(rep.k == 1);
  CHECK(rep.i == 0);
  CHECK(rep.j == 0);
  CHECK(rep.residual == poly("-4"));  // d/dx(-4x)
  CHECK_FALSE(rep.holds);

  auto ok = keller::check_identity_A(curve("y^2 + x"), IdentityAIndex{1, 0, 0});
  CHECK(ok.residual.is_zero());
  CHECK(ok.holds);

  CHECK_THROWS_AS(keller::check_identity_A(curve("y^2 + x"), IdentityAIndex{2, 1, 0}), BadIndex);
  CHECK_THROWS_AS(keller::check_identity_A(curve("y^2 + x"), IdentityAIndex{1, 1, 0}), BadIndex);
  CHECK_THROWS_AS(keller::check_identity_A(curve("y^3 + x"), IdentityAIndex{2, 0, 0}), BadIndex);
}

TEST_CASE("family A verdicts on known curves") {
  CHECK(keller::theorem_A_holds(curve("y^2 + x")));
  CHECK(keller::theorem_A_holds(curve("y^2 + 2*x*y + x^2 + x")));
  CHECK(keller::theorem_A_holds(curve("y^3 + x")));
  CHECK_FALSE(keller::theorem_A_holds(curve("y^2 + x^2")));
  CHECK_FALSE(keller::theorem_A_holds(curve(kReducibleWitness)));

  auto rep = keller::check_theorem_A(curve("y^3 + x"));
  REQUIRE(rep.identities.size() == 3);  // (k,i,j) = (1,0,0), (2,0,1), (2,1,0)
  CHECK(rep.identities[0].k == 1);
  CHECK(rep.identities[1].k == 2);
  CHECK(rep.identities[1].i == 0);
  CHECK(rep.identities[2].i == 1);
  CHECK(rep.verdict);
}

TEST_CASE("overlapping index pairs contribute nothing") {
  // every summand with r = s has two equal rows after replacement
  Rng rng(440001);
  for (int t = 0; t < 12; ++t) {
    CurveF f = testgen::random_curve(rng, rng.pick(2, 4), -2, 2);
    auto plain = keller::check_theorem_A(f, false);
    auto full = keller::check_theorem_A(f, true);
    REQUIRE(plain.identities.size() == full.identities.size());
    for (std::size_t i = 0; i < plain.identities.size(); ++i)
      CHECK(plain.identities[i].residual == full.identities[i].residual);
  }
}

TEST_CASE("family B identities on known curves") {
  auto rep = keller::check_theorem_B(curve("y^2 + x*y"));
  REQUIRE(rep.identities.size() == 2);
  CHECK(rep.identities[0].k == 0);
  CHECK(rep.identities[0].residual == poly("1"));  // d/dx det [[1,0],[2,x]]
  CHECK_FALSE(rep.identities[0].holds);
  CHECK_FALSE(rep.verdict);
  CHECK(rep.identities[0].i == std::nullopt);

  CHECK(keller::theorem_B_holds(curve("y^2 + x")));
  CHECK(keller::theorem_B_holds(curve("y^2 + 2*x*y + x^2 + x")));
  CHECK(keller::theorem_B_holds(curve("y^3 + x")));
  CHECK_FALSE(keller::theorem_B_holds(curve("y^2 + x^2")));

  CHECK_THROWS_AS(keller::identity_B(curve("y^2 + x"), 2), BadIndex);
  CHECK_THROWS_AS(keller::identity_B(curve("y^2 + x"), -1), BadIndex);
}

TEST_CASE("constant det M does not by itself give a component") {
  CurveF f = curve(kReducibleWitness);
  auto rep = keller::check_theorem_B(f);
  REQUIRE(rep.identities.size() == 3);
  CHECK(rep.identities[0].holds);                    // det M = 9 is constant
  CHECK(rep.identities[1].residual == poly("54"));   // k = 1 fails
  CHECK(rep.identities[2].residual == poly("108*x"));
  CHECK_FALSE(rep.verdict);
}

TEST_CASE("corner determinants on anchors") {
  auto M2 = keller::build_M(curve("y^2 + 2*x*y + x^2 + x"));
  CHECK(keller::detail::d1(M2, 1) == poly("-2"));
  CHECK(keller::detail::d2(M2, 2) == poly("2"));

  auto M3 = keller::build_M(curve("y^3 + x"));
  CHECK(keller::detail::d1(M3, 2) == poly("9"));
  CHECK(keller::detail::d2(M3, 2).is_zero());
  CHECK(keller::detail::d2(M3, 3).is_zero());
}

TEST_CASE("Q polynomial and component oracle") {
  auto r1 = keller::component_oracle_Q(curve("y^2 + x"));
  CHECK(r1.q.Q == poly("2*u - 2"));
  CHECK(r1.q.N == 0);
  REQUIRE(r1.orders.size() == 1);
  CHECK(r1.orders[0] == 0);
  CHECK(r1.component);

  auto r2 = keller::component_oracle_Q(curve("y^2 + x^2"));
  CHECK(r2.q.Q == poly("2*u - 4*x"));
  CHECK(r2.q.N == 1);
  REQUIRE(r2.orders.size() == 2);
  CHECK(r2.orders[0] == 1);  // Q_0 = 2u has order 1, not 0
  CHECK(r2.orders[1] == 0);
  CHECK_FALSE(r2.component);

  auto r3 = keller::component_oracle_Q(curve("y^3 + x"));
  CHECK(r3.q.Q == poly("9*u^2 - 18*u + 9"));
  CHECK(r3.component);

  auto r4 = keller::component_oracle_Q(curve("y^2 + 2*x*y + x^2 + x"));
  CHECK(r4.q.Q == poly("2*u - 2*v - 2"));
  CHECK(r4.component);
}

TEST_CASE("families A and B agree with the Q oracle on admissible curves") {
  Rng rng(440002);
  int tested = 0;
  for (int t = 0; t < 400 && tested < 60; ++t) {
    CurveF f = testgen::random_curve(rng, rng.pick(2, 3), -2, 2);
    auto flags = keller::check_main_assumptions(f);
    if (!flags.all_ok()) continue;
    ++tested;
    bool a = keller::theorem_A_holds(f);
    bool q = keller::component_oracle_Q(f).component;
    CHECK(a == q);
  }
  CHECK(tested >= 30);
}

TEST_CASE("families A and B coincide for m = 2") {
  Rng rng(440003);
  for (int t = 0; t < 80; ++t) {
    CurveF f = testgen::random_curve(rng, 2, -2, 2);
    CHECK(keller::theorem_A_holds(f) == keller::theorem_B_holds(f));
  }
}

TEST_CASE("identity checks are invariant under the a_1 shift") {
  Rng rng(440004);
  int moved = 0;
  for (int t = 0; t < 25; ++t) {
    CurveF f = testgen::random_curve(rng, rng.pick(2, 3), -2, 2);
    if (f.a[0].is_zero()) continue;
    ++moved;
    CurveF n = keller::normalize_a1(f);
    CHECK(keller::theorem_A_holds(f) == keller::theorem_A_holds(n));
    CHECK(keller::theorem_B_holds(f) == keller::theorem_B_holds(n));
  }
  CHECK(moved >= 15);
}

TEST_CASE("reconstruction of the second component") {
  auto g1 = keller::construct_associated(curve("y^2 + x"));
  CHECK(g1.g == poly("y"));
  CHECK(g1.R == Rational(-2));
  REQUIRE(g1.b.size() == 2);
  CHECK(g1.b[0] == poly("1"));
  CHECK(g1.b[1].is_zero());
  CHECK(g1.jac_value == Rational(1));

  auto g2 = keller::construct_associated(curve("y^2 + 2*x*y + x^2 + x"));
  CHECK(g2.g == poly("y + x"));
  CHECK(g2.R == Rational(-2));
  CHECK(g2.b[0] == poly("1"));
  CHECK(g2.b[1] == poly("x"));

  auto g3 = keller::construct_associated(curve("y^3 + x"));
  CHECK(g3.g == poly("y"));
  CHECK(g3.R == Rational(9));
  REQUIRE(g3.b.size() == 3);
  CHECK(g3.b[0].is_zero());
  CHECK(g3.b[1] == poly("1"));
  CHECK(g3.b[2].is_zero());
}

TEST_CASE("reconstruction failure modes") {
  CHECK_THROWS_AS(keller::construct_associated(curve("y^2 + x^2")), NotKeller);
  CHECK_THROWS_AS(keller::construct_associated(curve("y^2 + 1")), NotKeller);  // det M = 0
  CHECK_THROWS_AS(keller::construct_associated(curve(kReducibleWitness)), ReconstructionMismatch);
}

TEST_CASE("reconstructed pair always has Jacobian one") {
  Rng rng(440005);
  int built = 0;
  for (int t = 0; t < 300 && built < 25; ++t) {
    CurveF f = testgen::random_curve(rng, rng.pick(2, 3), -2, 2);
    // B can hold vacuously when det M = 0; reconstruction needs det M != 0
    if (keller::determinant(keller::build_M(f).matrix).is_zero()) continue;
    if (!keller::theorem_B_holds(f)) continue;
    auto got = keller::construct_associated(f);
    CHECK(keller::jacobian(f.as_poly(), got.g) == MPoly::one());
    CHECK(got.g.degree_in(Var::y) <= f.m - 1);
    ++built;
  }
  CHECK(built >= 10);
}

TEST_CASE("closed forms for cubic curves") {
  auto r1 = keller::identities_m3(poly("0"), poly("x"));  // y^3 + x
  CHECK(r1.A3);
  CHECK(r1.B3);
  CHECK(r1.w_residual.is_zero());

  auto r2 = keller::identities_m3(poly("-3*x^2 + 1"), poly("2*x^3 - x"));
  CHECK_FALSE(r2.A3);
  CHECK_FALSE(r2.B3);
  CHECK(r2.w_residual.is_zero());       // W = 3 is constant
  CHECK(r2.a2_residual == poly("-6"));  // a_2'' != 0 is what fails

  CHECK_THROWS_AS(keller::identities_m3(poly("y"), poly("x")), keller::NonConformingInput);
}

TEST_CASE("closed forms match the full identity checks for m = 3") {
  Rng rng(440006);
  for (int t = 0; t < 50; ++t) {
    MPoly a2 = testgen::random_univariate(rng, Var::x, 2, -2, 2);
    MPoly a3 = testgen::random_univariate(rng, Var::x, 3, -2, 2);
    CurveF f(3, {MPoly::zero(), a2, a3});
    auto m3 = keller::identities_m3(a2, a3);
    CHECK(m3.A3 == keller::theorem_A_holds(f));
    CHECK(m3.B3 == keller::theorem_B_holds(f));
    CHECK(m3.A3 == m3.B3);
  }
}
