#include "latcut/lp.hpp"

namespace latcut {

namespace {

// Dense tableau over the rationals. Free variables are split x = u - w with
// u, w >= 0; one slack per row; phase-1 artificials sit past `real_cols`.
struct Tableau {
  int m;          // rows
  int real_cols;  // u, w, slack columns
  int all_cols;   // plus artificials
  std::vector<QVec> t;  // m x (all_cols + 1), last column is the rhs
  std::vector<int> basis;
  QVec cost;  // reduced-cost row, all_cols + 1 entries

  Rat& rhs(int i) { return t[i][all_cols]; }

  void pivot(int row, int col) {
    Rat inv = 1 / t[row][col];
    for (auto& v : t[row]) v *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (int j = 0; j <= all_cols; ++j) t[i][j] -= f * t[row][j];
    }
    if (cost[col] != 0) {
      Rat f = cost[col];
      for (int j = 0; j <= all_cols; ++j) cost[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  void set_objective(const QVec& obj) {
    cost.assign(all_cols + 1, Rat(0));
    for (int j = 0; j < all_cols; ++j) cost[j] = obj[j];
    for (int i = 0; i < m; ++i) {
      if (obj[basis[i]] == 0) continue;
      Rat f = obj[basis[i]];
      for (int j = 0; j <= all_cols; ++j) cost[j] -= f * t[i][j];
    }
  }

  // Bland's rule: entering = smallest eligible column with positive reduced
  // cost, leaving = min ratio with smallest basic index on ties.
  // Returns false when the objective is unbounded.
  bool run(int max_col) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < max_col; ++j)
        if (cost[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = rhs(i) / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rat value_of(int col) const {
    for (int i = 0; i < m; ++i)
      if (basis[i] == col) return t[i][all_cols];
    return Rat(0);
  }
};

}  // namespace

LpResult lp_maximize(const std::vector<QVec>& rows, const QVec& rhs, const QVec& c) {
  int m = static_cast<int>(rows.size());
  int n = static_cast<int>(c.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw Error("lp: row dimension mismatch");
  if (static_cast<int>(rhs.size()) != m) throw Error("lp: rhs dimension mismatch");

  Tableau tb;
  tb.m = m;
  tb.real_cols = 2 * n + m;
  tb.all_cols = tb.real_cols + m;
  tb.t.assign(m, QVec(tb.all_cols + 1, Rat(0)));
  tb.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    int sign = rhs[i] < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) {
      tb.t[i][j] = Rat(sign) * rows[i][j];
      tb.t[i][n + j] = Rat(-sign) * rows[i][j];
    }
    tb.t[i][2 * n + i] = sign;
    tb.t[i][tb.real_cols + i] = 1;
    tb.t[i][tb.all_cols] = Rat(sign) * rhs[i];
    tb.basis[i] = tb.real_cols + i;
  }

  // Phase 1: drive the artificials to zero.
  {
    QVec obj(tb.all_cols, Rat(0));
    for (int i = 0; i < m; ++i) obj[tb.real_cols + i] = -1;
    tb.set_objective(obj);
    tb.run(tb.all_cols);
    Rat v(0);
    for (int i = 0; i < m; ++i)
      if (tb.basis[i] >= tb.real_cols) v += tb.rhs(i);
    if (v != 0) return {LpStatus::Infeasible, Rat(0), {}};
  }

  // Remove artificials from the basis; all-zero rows are redundant.
  for (int i = tb.m - 1; i >= 0; --i) {
    if (tb.basis[i] < tb.real_cols) continue;
    int col = -1;
    for (int j = 0; j < tb.real_cols; ++j)
      if (tb.t[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      tb.pivot(i, col);
    } else {
      tb.t.erase(tb.t.begin() + i);
      tb.basis.erase(tb.basis.begin() + i);
      --tb.m;
    }
  }

  // Phase 2.
  QVec obj(tb.all_cols, Rat(0));
  for (int j = 0; j < n; ++j) {
    obj[j] = c[j];
    obj[n + j] = -c[j];
  }
  tb.set_objective(obj);
  if (!tb.run(tb.real_cols)) return {LpStatus::Unbounded, Rat(0), {}};

  QVec x(n);
  for (int j = 0; j < n; ++j) x[j] = tb.value_of(j) - tb.value_of(n + j);
  Rat val(0);
  for (int j = 0; j < n; ++j) val += c[j] * x[j];
  return {LpStatus::Optimal, val, std::move(x)};
}

bool lp_feasible(const std::vector<QVec>& rows, const QVec& rhs, int nvars) {
  QVec zero(nvars, Rat(0));
  return lp_maximize(rows, rhs, zero).status != LpStatus::Infeasible;
}

}  // namespace latcut
