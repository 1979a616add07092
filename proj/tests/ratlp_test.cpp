#include <doctest.h>

#include "temper/ratlp.hpp"

using namespace temper;

namespace {

LpRow row(std::initializer_list<long> coeff, Rel rel, const Rat& rhs) {
  return LpRow{rat_vec(coeff), rel, rhs};
}

// Every optimal point must satisfy the program it came from.
void check_feasible(const LinProgram& lp, const LpOutcome& out) {
  REQUIRE(out.status == LpStatus::Optimal);
  for (const LpRow& r : lp.rows) {
    Rat lhs = dot(r.coeff, out.point);
    switch (r.rel) {
      case Rel::LE: CHECK(lhs <= r.rhs); break;
      case Rel::EQ: CHECK(lhs == r.rhs); break;
      case Rel::GE: CHECK(lhs >= r.rhs); break;
    }
  }
  CHECK(out.value == dot(lp.objective, out.point));
}

// Dual feasibility plus strong duality, stated for a minimization with
// free primal variables: A^T y = c, y <= 0 on LE rows, y >= 0 on GE
// rows, and b . y equals the optimal value.
void check_dual(const LinProgram& lp, const LpOutcome& out) {
  REQUIRE(out.status == LpStatus::Optimal);
  REQUIRE(out.dual.size() == lp.rows.size());
  for (int j = 0; j < lp.nvars; ++j) {
    Rat aj = 0;
    for (size_t i = 0; i < lp.rows.size(); ++i)
      aj += out.dual[i] * lp.rows[i].coeff[j];
    CHECK(aj == lp.objective[j]);
  }
  Rat by = 0;
  for (size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rows[i].rel == Rel::LE) CHECK(out.dual[i] <= 0);
    if (lp.rows[i].rel == Rel::GE) CHECK(out.dual[i] >= 0);
    by += out.dual[i] * lp.rows[i].rhs;
  }
  CHECK(by == out.value);
}

}  // namespace

TEST_SUITE("ratlp") {

TEST_CASE("absolute value epigraph") {
  // min s subject to s >= t, s >= -t, 2t = 1.
  LinProgram lp;
  lp.nvars = 2;
  lp.objective = rat_vec({0, 1});
  lp.rows = {row({-1, 1}, Rel::GE, 0), row({1, 1}, Rel::GE, 0),
             row({2, 0}, Rel::EQ, 1)};
  LpOutcome out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == rat(1, 2));
  CHECK(out.point == RatVec{rat(1, 2), rat(1, 2)});
  check_feasible(lp, out);
  check_dual(lp, out);
}

TEST_CASE("infeasible system") {
  LinProgram lp;
  lp.nvars = 1;
  lp.objective = rat_vec({1});
  lp.rows = {row({1}, Rel::GE, 1), row({1}, Rel::LE, 0)};
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded objective") {
  LinProgram lp;
  lp.nvars = 1;
  lp.objective = rat_vec({-1});
  lp.rows = {row({1}, Rel::GE, 0)};
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);

  LinProgram free;
  free.nvars = 2;
  free.objective = rat_vec({1, 0});
  free.rows = {row({0, 1}, Rel::EQ, 3)};
  CHECK(solve_lp(free).status == LpStatus::Unbounded);
}

TEST_CASE("pure equality system") {
  LinProgram lp;
  lp.nvars = 2;
  lp.objective = rat_vec({0, 0});
  lp.rows = {row({1, 1}, Rel::EQ, 3), row({1, -1}, Rel::EQ, 1)};
  LpOutcome out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == 0);
  CHECK(out.point == RatVec{rat(2), rat(1)});
}

TEST_CASE("redundant equalities are dropped") {
  LinProgram lp;
  lp.nvars = 2;
  lp.objective = rat_vec({1, 1});
  lp.rows = {row({2, 0}, Rel::EQ, 1), row({2, 0}, Rel::EQ, 1),
             row({4, 0}, Rel::EQ, 2), row({0, 1}, Rel::GE, -5)};
  LpOutcome out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == rat(-9, 2));
  check_feasible(lp, out);
}

TEST_CASE("negative right-hand sides") {
  LinProgram lp;
  lp.nvars = 2;
  lp.objective = rat_vec({3, 1});
  lp.rows = {row({-1, 0}, Rel::LE, -2), row({0, -2}, Rel::LE, -3),
             row({1, 1}, Rel::LE, 10)};
  LpOutcome out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == rat(15, 2));
  CHECK(out.point == RatVec{rat(2), rat(3, 2)});
  check_feasible(lp, out);
  check_dual(lp, out);
}

TEST_CASE("degenerate vertex with classic cycling data") {
  // Beale's cycling example, with nonnegativity written as rows since
  // the solver treats every variable as free.
  LinProgram lp;
  lp.nvars = 4;
  lp.objective = {rat(-3, 4), rat(150), rat(-1, 50), rat(6)};
  lp.rows = {
      LpRow{{rat(1, 4), rat(-60), rat(-1, 25), rat(9)}, Rel::LE, rat(0)},
      LpRow{{rat(1, 2), rat(-90), rat(-1, 50), rat(3)}, Rel::LE, rat(0)},
      row({0, 0, 1, 0}, Rel::LE, 1),
      row({1, 0, 0, 0}, Rel::GE, 0),
      row({0, 1, 0, 0}, Rel::GE, 0),
      row({0, 0, 1, 0}, Rel::GE, 0),
      row({0, 0, 0, 1}, Rel::GE, 0),
  };
  LpOutcome out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == rat(-1, 20));
  CHECK(out.point == RatVec{rat(1, 25), rat(0), rat(1), rat(0)});
  check_feasible(lp, out);
  check_dual(lp, out);
}

TEST_CASE("duality on a mixed system") {
  LinProgram lp;
  lp.nvars = 3;
  lp.objective = rat_vec({1, 2, 3});
  lp.rows = {row({1, 1, 1}, Rel::EQ, 6), row({1, -1, 0}, Rel::GE, 1),
             row({0, 1, 2}, Rel::GE, 2), row({1, 0, 0}, Rel::LE, 5)};
  LpOutcome out = solve_lp(lp);
  check_feasible(lp, out);
  check_dual(lp, out);
  CHECK(out.value == 8);
}

TEST_CASE("input validation") {
  LinProgram lp;
  lp.nvars = 2;
  lp.objective = rat_vec({1});
  CHECK_THROWS_AS(solve_lp(lp), std::invalid_argument);
  lp.objective = rat_vec({1, 1});
  lp.rows = {row({1}, Rel::GE, 0)};
  CHECK_THROWS_AS(solve_lp(lp), std::invalid_argument);
}

}  // TEST_SUITE
