#pragma once

#include <optional>

#include "latcut/rational.hpp"

namespace latcut {

// Dense rational matrix, stored row-major as a list of rows.
struct QMat {
  int nrows = 0;
  int ncols = 0;
  std::vector<QVec> rows;

  QMat() = default;
  QMat(int r, int c) : nrows(r), ncols(c), rows(r, QVec(c, Rat(0))) {}

  Rat& at(int i, int j) { return rows[i][j]; }
  const Rat& at(int i, int j) const { return rows[i][j]; }

  static QMat identity(int n);
  static QMat from_rows(std::vector<QVec> rs);
};

Rat dot(const QVec& a, const QVec& b);
Rat dot(const IntVec& a, const QVec& b);
Int dot(const IntVec& a, const IntVec& b);

QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rat& s);

bool is_zero(const QVec& v);
bool is_zero(const IntVec& v);

QMat transpose(const QMat& A);
QMat mat_mul(const QMat& A, const QMat& B);
QVec mat_vec(const QMat& A, const QVec& x);

// Exact rank over the rationals (Gaussian elimination, first nonzero pivot).
int rank_exact(const QMat& A);

// One exact solution of A x = b if the system is consistent (free variables
// pinned to zero), nullopt otherwise. Throws on dimension mismatch.
std::optional<QVec> solve_exact(const QMat& A, const QVec& b);

// Basis of { x : A x = 0 }.
std::vector<QVec> nullspace(const QMat& A);

}  // namespace latcut
