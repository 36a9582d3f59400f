#include "latcut/linalg.hpp"

namespace latcut {

QMat QMat::identity(int n) {
  QMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

QMat QMat::from_rows(std::vector<QVec> rs) {
  QMat A;
  A.nrows = static_cast<int>(rs.size());
  A.ncols = rs.empty() ? 0 : static_cast<int>(rs[0].size());
  for (const auto& r : rs)
    if (static_cast<int>(r.size()) != A.ncols) throw Error("matrix: ragged rows");
  A.rows = std::move(rs);
  return A;
}

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("add: dimension mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("sub: dimension mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec scale(const QVec& a, const Rat& s) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QMat transpose(const QMat& A) {
  QMat T(A.ncols, A.nrows);
  for (int i = 0; i < A.nrows; ++i)
    for (int j = 0; j < A.ncols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

QMat mat_mul(const QMat& A, const QMat& B) {
  if (A.ncols != B.nrows) throw Error("mat_mul: dimension mismatch");
  QMat C(A.nrows, B.ncols);
  for (int i = 0; i < A.nrows; ++i)
    for (int k = 0; k < A.ncols; ++k) {
      if (A.at(i, k) == 0) continue;
      for (int j = 0; j < B.ncols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
    }
  return C;
}

QVec mat_vec(const QMat& A, const QVec& x) {
  if (A.ncols != static_cast<int>(x.size())) throw Error("mat_vec: dimension mismatch");
  QVec y(A.nrows, Rat(0));
  for (int i = 0; i < A.nrows; ++i) y[i] = dot(A.rows[i], x);
  return y;
}

namespace {

// Row echelon form in place; returns pivot columns. First nonzero pivot in
// each column, scanning rows top-down: deterministic, no numeric concerns.
std::vector<int> echelon(QMat& M) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < M.ncols && row < M.nrows; ++col) {
    int p = -1;
    for (int i = row; i < M.nrows; ++i)
      if (M.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(M.rows[p], M.rows[row]);
    Rat inv = 1 / M.at(row, col);
    for (int j = col; j < M.ncols; ++j) M.at(row, j) *= inv;
    for (int i = 0; i < M.nrows; ++i) {
      if (i == row || M.at(i, col) == 0) continue;
      Rat f = M.at(i, col);
      for (int j = col; j < M.ncols; ++j) M.at(i, j) -= f * M.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_exact(const QMat& A) {
  QMat M = A;
  return static_cast<int>(echelon(M).size());
}

std::optional<QVec> solve_exact(const QMat& A, const QVec& b) {
  if (A.nrows != static_cast<int>(b.size())) throw Error("solve_exact: dimension mismatch");
  QMat M(A.nrows, A.ncols + 1);
  for (int i = 0; i < A.nrows; ++i) {
    for (int j = 0; j < A.ncols; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.ncols) = b[i];
  }
  // Eliminate on the coefficient columns only, carrying the rhs along.
  std::vector<int> pivots;
  {
    int row = 0;
    for (int col = 0; col < A.ncols && row < M.nrows; ++col) {
      int p = -1;
      for (int i = row; i < M.nrows; ++i)
        if (M.at(i, col) != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(M.rows[p], M.rows[row]);
      Rat inv = 1 / M.at(row, col);
      for (int j = col; j <= A.ncols; ++j) M.at(row, j) *= inv;
      for (int i = 0; i < M.nrows; ++i) {
        if (i == row || M.at(i, col) == 0) continue;
        Rat f = M.at(i, col);
        for (int j = col; j <= A.ncols; ++j) M.at(i, j) -= f * M.at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
  }
  // Inconsistent iff some zero row has nonzero rhs.
  for (int i = static_cast<int>(pivots.size()); i < M.nrows; ++i)
    if (M.at(i, A.ncols) != 0) return std::nullopt;
  QVec x(A.ncols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = M.at(static_cast<int>(r), A.ncols);
  return x;
}

std::vector<QVec> nullspace(const QMat& A) {
  QMat M = A;
  std::vector<int> pivots = echelon(M);
  std::vector<bool> is_pivot(A.ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < A.ncols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(A.ncols, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace latcut
