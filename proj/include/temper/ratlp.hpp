#pragma once

#include "temper/rational.hpp"

namespace temper {

enum class Rel { LE, EQ, GE };

struct LpRow {
  RatVec coeff;
  Rel rel;
  Rat rhs;
};

// Minimize objective . x subject to the rows. All variables are free;
// nonnegativity must be stated explicitly as rows when wanted.
struct LinProgram {
  int nvars = 0;
  RatVec objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatVec point;  // length nvars, set when Optimal
  RatVec dual;   // one multiplier per input row, set when Optimal
};

// Exact two-phase primal simplex with Bland's rule. Free variables are
// split into nonnegative pairs internally; artificial variables are
// pivoted out or their rows dropped before phase 2.
LpOutcome solve_lp(const LinProgram& lp);

}  // namespace temper
