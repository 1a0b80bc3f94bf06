#include <doctest.h>

#include "eptas/exactlp.hpp"
#include "support.hpp"

using namespace eptas;

namespace {

LinearProgram two_var_min(Rational cx, Rational cy) {
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.add_variable(Rational(0), std::nullopt, cx);
  lp.add_variable(Rational(0), std::nullopt, cy);
  return lp;
}

}  // namespace

TEST_CASE("feasibility box") {
  LinearProgram lp;
  lp.add_variable(Rational(0), Rational(5));
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(is_feasible_point(lp, r.point));
}

TEST_CASE("single binding bound") {
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.add_variable(Rational(0), std::nullopt, Rational(1));
  lp.add_constraint({Rational(1)}, Relation::GreaterEqual, Rational(3));
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.point[0] == 3);
  CHECK(r.value == 3);
}

TEST_CASE("two-variable polyhedron") {
  LinearProgram lp = two_var_min(Rational(1), Rational(1));
  lp.add_constraint({Rational(1), Rational(2)}, Relation::GreaterEqual, Rational(4));
  lp.add_constraint({Rational(2), Rational(1)}, Relation::GreaterEqual, Rational(4));
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == make_rational(8, 3));
  CHECK(r.point[0] == make_rational(4, 3));
  CHECK(r.point[1] == make_rational(4, 3));
}

TEST_CASE("unbounded") {
  LinearProgram lp = two_var_min(Rational(-1), Rational(0));
  lp.add_constraint({Rational(1), Rational(-1)}, Relation::LessEqual, Rational(2));
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);

  // A free variable pushed to -infinity.
  LinearProgram free;
  free.sense = Sense::Minimize;
  free.add_variable(Rational(-1), std::nullopt, Rational(1));
  free.add_variable(Rational(0), std::nullopt, Rational(0));
  free.add_constraint({Rational(1), Rational(-1)}, Relation::Equal, Rational(0));
  CHECK(solve_lp(free).status == LpStatus::Optimal);
}

TEST_CASE("infeasibility comes with a certificate") {
  LinearProgram lp = two_var_min(Rational(1), Rational(1));
  lp.add_constraint({Rational(1), Rational(1)}, Relation::LessEqual, Rational(1));
  lp.add_constraint({Rational(1), Rational(1)}, Relation::GreaterEqual, Rational(2));
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Infeasible);
  CHECK(verify_farkas(lp, r.farkas));
  CHECK_FALSE(verify_farkas(lp, {Rational(0), Rational(0)}));
  CHECK_FALSE(verify_farkas(lp, {Rational(1), Rational(1)}));

  // Upper bounds take part in the certificate.
  LinearProgram boxed;
  boxed.add_variable(Rational(0), Rational(1));
  boxed.add_variable(Rational(0), Rational(1));
  boxed.add_constraint({Rational(1), Rational(1)}, Relation::Equal, Rational(3));
  const LpResult b = solve_lp(boxed);
  REQUIRE(b.status == LpStatus::Infeasible);
  CHECK(verify_farkas(boxed, b.farkas));

  // Contradictory bounds need no row multipliers.
  LinearProgram crossed;
  crossed.add_variable(Rational(2), Rational(1));
  const LpResult c = solve_lp(crossed);
  CHECK(c.status == LpStatus::Infeasible);
  CHECK(c.farkas.empty());
}

TEST_CASE("equalities, fixed variables and negative bounds") {
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.add_variable(Rational(-3), Rational(-3), Rational(1));  // fixed
  lp.add_variable(Rational(-5), Rational(5), Rational(-1));
  lp.add_variable(Rational(-2), std::nullopt, Rational(2));
  lp.add_constraint({Rational(1), Rational(1), Rational(1)}, Relation::Equal, Rational(0));
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(is_feasible_point(lp, r.point));
  CHECK(r.point[0] == -3);
  // y + z = 3 with y <= 5, z >= -2: min -y + 2z at y = 5, z = -2.
  CHECK(r.value == -3 - 5 - 4);
}

TEST_CASE("degenerate pivots terminate") {
  // Beale's cycling example, written as a minimisation.
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.add_variable(Rational(0), std::nullopt, make_rational(-3, 4));
  lp.add_variable(Rational(0), std::nullopt, Rational(150));
  lp.add_variable(Rational(0), std::nullopt, make_rational(-1, 50));
  lp.add_variable(Rational(0), std::nullopt, Rational(6));
  lp.add_constraint({make_rational(1, 4), Rational(-60), make_rational(-1, 25), Rational(9)},
                    Relation::LessEqual, Rational(0));
  lp.add_constraint({make_rational(1, 2), Rational(-90), make_rational(-1, 50), Rational(3)},
                    Relation::LessEqual, Rational(0));
  lp.add_constraint({Rational(0), Rational(0), Rational(1), Rational(0)}, Relation::LessEqual,
                    Rational(1));
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == make_rational(-1, 20));
}

TEST_CASE("redundant equality rows") {
  LinearProgram lp = two_var_min(Rational(1), Rational(2));
  lp.add_constraint({Rational(1), Rational(1)}, Relation::Equal, Rational(2));
  lp.add_constraint({Rational(2), Rational(2)}, Relation::Equal, Rational(4));
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 2);
  CHECK(is_feasible_point(lp, r.point));
}

TEST_CASE("add_constraint pads and add_variable widens") {
  LinearProgram lp;
  lp.add_variable();
  lp.add_constraint({Rational(1)}, Relation::LessEqual, Rational(1));
  lp.add_variable();
  CHECK(lp.constraints[0].coefficients.size() == 2);
  lp.add_constraint({}, Relation::LessEqual, Rational(0));
  CHECK(lp.constraints[1].coefficients.size() == 2);
}

TEST_CASE("random LPs agree with vertex enumeration") {
  std::mt19937_64 rng(77);
  int infeasible = 0;
  for (int i = 0; i < 300; ++i) {
    CAPTURE(i);
    const LinearProgram lp = eptas::testing::random_bounded_lp(rng);
    const LpResult r = solve_lp(lp);
    const auto expected = eptas::testing::vertex_enumeration_min(lp);
    if (!expected) {
      ++infeasible;
      REQUIRE(r.status == LpStatus::Infeasible);
      CHECK(verify_farkas(lp, r.farkas));
    } else {
      REQUIRE(r.status == LpStatus::Optimal);
      CHECK(is_feasible_point(lp, r.point));
      if (lp.sense == Sense::Minimize) CHECK(r.value == *expected);
    }
  }
  CHECK(infeasible > 0);
}
