#include "temper/ratlp.hpp"

#include <algorithm>
#include <stdexcept>

namespace temper {

namespace {

constexpr long kMaxPivots = 200000;

struct Tableau {
  std::vector<RatVec> rows;  // each of length ncols + 1 (rhs last)
  RatVec obj;                // reduced costs, updated with every pivot
  std::vector<int> basis;    // basic column per row
  int ncols = 0;

  Rat& rhs(int i) { return rows[i][ncols]; }

  void pivot(int r, int c) {
    Rat p = rows[r][c];
    Rat inv = 1 / p;
    for (Rat& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rat f = rows[i][c];
      if (f == 0) continue;
      for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (!obj.empty()) {
      Rat f = obj[c];
      if (f != 0)
        for (int j = 0; j <= ncols; ++j) obj[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Reduced costs of the current basis, priced once; pivots keep them
  // in step from here on.
  void load_costs(const RatVec& cost) {
    obj.assign(ncols + 1, Rat(0));
    for (int j = 0; j < ncols; ++j) obj[j] = cost[j];
    for (size_t i = 0; i < rows.size(); ++i) {
      Rat cb = cost[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= ncols; ++j) obj[j] -= cb * rows[i][j];
    }
  }
};

enum class StepResult { Optimal, Unbounded };

// Bland's rule: enter the lowest-index column with negative reduced
// cost, leave on the lowest-index basic variable among the ratio ties.
StepResult run_simplex(Tableau& t, long& budget) {
  int m = static_cast<int>(t.rows.size());
  while (true) {
    if (--budget < 0) throw std::logic_error("simplex pivot budget exceeded");
    int enter = -1;
    for (int j = 0; j < t.ncols; ++j)
      if (t.obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return StepResult::Optimal;

    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t.rows[i][enter] <= 0) continue;
      Rat ratio = t.rhs(i) / t.rows[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return StepResult::Unbounded;
    t.pivot(leave, enter);
  }
}

}  // namespace

LpOutcome solve_lp(const LinProgram& lp) {
  if (static_cast<int>(lp.objective.size()) != lp.nvars)
    throw std::invalid_argument("objective size mismatch");
  for (const LpRow& r : lp.rows)
    if (static_cast<int>(r.coeff.size()) != lp.nvars)
      throw std::invalid_argument("row size mismatch");

  int n = lp.nvars;
  int m = static_cast<int>(lp.rows.size());

  // Equality form. Columns: u_0..u_{n-1}, v_0..v_{n-1} (x = u - v),
  // one slack or surplus per inequality row, artificials at the end.
  std::vector<int> sign(m, 1);
  std::vector<Rel> rel(m);
  int nslack = 0;
  for (int i = 0; i < m; ++i) {
    rel[i] = lp.rows[i].rel;
    if (lp.rows[i].rhs < 0) {
      sign[i] = -1;
      if (rel[i] == Rel::LE)
        rel[i] = Rel::GE;
      else if (rel[i] == Rel::GE)
        rel[i] = Rel::LE;
    } else if (lp.rows[i].rhs == 0 && rel[i] == Rel::GE) {
      // A homogeneous >= row negates to a <= row whose slack can start
      // basic, so it needs no artificial.
      sign[i] = -1;
      rel[i] = Rel::LE;
    }
    if (rel[i] != Rel::EQ) ++nslack;
  }
  int nart = 0;
  for (int i = 0; i < m; ++i)
    if (rel[i] != Rel::LE) ++nart;

  int ncols = 2 * n + nslack + nart;
  Tableau t;
  t.ncols = ncols;
  t.rows.assign(m, RatVec(ncols + 1, Rat(0)));
  t.basis.assign(m, -1);

  int next_slack = 2 * n;
  int next_art = 2 * n + nslack;
  std::vector<int> art_of_row(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat c = sign[i] * lp.rows[i].coeff[j];
      t.rows[i][j] = c;
      t.rows[i][n + j] = -c;
    }
    t.rows[i][ncols] = sign[i] * lp.rows[i].rhs;
    if (rel[i] == Rel::LE) {
      t.rows[i][next_slack] = 1;
      t.basis[i] = next_slack++;
    } else if (rel[i] == Rel::GE) {
      t.rows[i][next_slack] = -1;
      ++next_slack;
      t.rows[i][next_art] = 1;
      art_of_row[i] = next_art;
      t.basis[i] = next_art++;
    } else {
      t.rows[i][next_art] = 1;
      art_of_row[i] = next_art;
      t.basis[i] = next_art++;
    }
  }

  // Keep the pristine equality-form matrix for the dual solve.
  std::vector<RatVec> original = t.rows;
  std::vector<int> origin(m);
  for (int i = 0; i < m; ++i) origin[i] = i;

  long budget = kMaxPivots;
  LpOutcome out;

  if (nart > 0) {
    RatVec phase1(ncols, Rat(0));
    for (int j = 2 * n + nslack; j < ncols; ++j) phase1[j] = 1;
    t.load_costs(phase1);
    if (run_simplex(t, budget) == StepResult::Unbounded)
      throw std::logic_error("phase 1 cannot be unbounded");
    Rat infeas = 0;
    for (size_t i = 0; i < t.rows.size(); ++i)
      if (phase1[t.basis[i]] != 0) infeas += t.rhs(static_cast<int>(i));
    if (infeas != 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    // Drive artificials out of the basis; rows that cannot release
    // theirs are redundant and get dropped.
    for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
      if (t.basis[i] < 2 * n + nslack) continue;
      int piv = -1;
      for (int j = 0; j < 2 * n + nslack && piv < 0; ++j)
        if (t.rows[i][j] != 0) piv = j;
      if (piv >= 0) {
        t.pivot(i, piv);
      } else {
        t.rows.erase(t.rows.begin() + i);
        t.basis.erase(t.basis.begin() + i);
        origin.erase(origin.begin() + i);
      }
    }
    for (RatVec& row : t.rows) {
      row.erase(row.begin() + 2 * n + nslack, row.begin() + ncols);
    }
    t.ncols = 2 * n + nslack;
    ncols = t.ncols;
  }

  RatVec cost(ncols, Rat(0));
  for (int j = 0; j < n; ++j) {
    cost[j] = lp.objective[j];
    cost[n + j] = -lp.objective[j];
  }
  t.load_costs(cost);
  if (run_simplex(t, budget) == StepResult::Unbounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.status = LpStatus::Optimal;
  out.point.assign(n, Rat(0));
  std::vector<Rat> colval(ncols, Rat(0));
  for (size_t i = 0; i < t.rows.size(); ++i)
    colval[t.basis[i]] = t.rhs(static_cast<int>(i));
  for (int j = 0; j < n; ++j) out.point[j] = colval[j] - colval[n + j];
  out.value = dot(lp.objective, out.point);

  // Dual multipliers from B^T y = c_B over the surviving rows.
  int ms = static_cast<int>(t.rows.size());
  std::vector<RatVec> bt(ms, RatVec(ms));
  RatVec cb(ms);
  for (int k = 0; k < ms; ++k) {
    cb[k] = cost[t.basis[k]];
    for (int i = 0; i < ms; ++i)
      bt[k][i] = original[origin[i]][t.basis[k]];
  }
  auto y = solve_linear(std::move(bt), cb);
  if (!y) throw std::logic_error("basis matrix is singular");
  out.dual.assign(m, Rat(0));
  for (int i = 0; i < ms; ++i)
    out.dual[origin[i]] = sign[origin[i]] * (*y)[i];
  return out;
}

}  // namespace temper
