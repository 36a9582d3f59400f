#pragma once

#include "latcut/linalg.hpp"

namespace latcut {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;   // optimal objective value (Optimal only)
  QVec point;  // an optimal point (Optimal only)
};

// max <c, x> over { x free : rows[i] . x <= rhs[i] }. Exact two-phase
// simplex with Bland's rule; terminates on every rational input.
LpResult lp_maximize(const std::vector<QVec>& rows, const QVec& rhs, const QVec& c);

inline LpResult lp_minimize(const std::vector<QVec>& rows, const QVec& rhs, const QVec& c) {
  QVec neg(c.size());
  for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  LpResult r = lp_maximize(rows, rhs, neg);
  if (r.status == LpStatus::Optimal) r.value = -r.value;
  return r;
}

bool lp_feasible(const std::vector<QVec>& rows, const QVec& rhs, int nvars);

}  // namespace latcut
