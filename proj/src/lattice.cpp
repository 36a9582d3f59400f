#include "latcut/lattice.hpp"

namespace latcut {

Int content(const IntVec& v) {
  Int g(0);
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVec primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0) throw Error("primitive: zero vector");
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec primitive_direction(const QVec& v) {
  Int l(1);
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  IntVec iv(v.size());
  for (size_t i = 0; i < v.size(); ++i) iv[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(iv);
}

IntVec rot90(const IntVec& a) {
  if (a.size() != 2) throw Error("rot90: dimension must be 2");
  return {-a[1], a[0]};
}

IntVec integer_point_on_line_2d(const IntVec& a, const Int& c) {
  if (a.size() != 2) throw Error("integer_point_on_line_2d: dimension must be 2");
  Int g, p, q;
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a[0].get_mpz_t(), a[1].get_mpz_t());
  if (g == 0) throw Error("integer_point_on_line_2d: zero normal");
  if (!mpz_divisible_p(c.get_mpz_t(), g.get_mpz_t()))
    throw Error("integer_point_on_line_2d: level not attainable");
  Int f = c / g;
  return {p * f, q * f};
}

namespace {

int col_count(const IntMat& A) { return A.empty() ? 0 : static_cast<int>(A[0].size()); }

void check_rect(const IntMat& A) {
  for (const auto& r : A)
    if (static_cast<int>(r.size()) != col_count(A)) throw Error("hnf: ragged matrix");
}

// col_j := p*col_j + q*col_k ; col_k := r*col_k + s*col_j (applied to both M
// and U simultaneously, using the original columns).
void col_combine(IntMat& M, int j, int k, const Int& p, const Int& q, const Int& r,
                 const Int& s) {
  for (auto& row : M) {
    Int cj = row[j], ck = row[k];
    row[j] = p * cj + q * ck;
    row[k] = r * ck + s * cj;
  }
}

void col_addmul(IntMat& M, int dst, int src, const Int& f) {
  for (auto& row : M) row[dst] += f * row[src];
}

void col_negate(IntMat& M, int j) {
  for (auto& row : M) row[j] = -row[j];
}

}  // namespace

HnfResult hnf(const IntMat& A) {
  check_rect(A);
  int m = static_cast<int>(A.size());
  int n = col_count(A);
  if (m == 0 || n == 0) throw Error("hnf: empty matrix");
  IntMat H = A;
  IntMat U(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) U[i][i] = 1;

  int pc = 0;  // next pivot column
  for (int row = 0; row < m && pc < n; ++row) {
    // Gather the row's entries in columns >= pc into column pc via gcd steps.
    for (int k = pc + 1; k < n; ++k) {
      if (H[row][k] == 0) continue;
      Int a = H[row][pc], b = H[row][k];
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      // [pc k] *= [[p, -b/g], [q, a/g]] ; determinant (pa+qb)/g = 1.
      Int r = a / g, s = -(b / g);
      col_combine(H, pc, k, p, q, r, s);
      col_combine(U, pc, k, p, q, r, s);
    }
    if (H[row][pc] == 0) continue;  // no pivot in this row
    if (H[row][pc] < 0) {
      col_negate(H, pc);
      col_negate(U, pc);
    }
    // Reduce earlier pivot columns into [0, pivot) on this row.
    Int piv = H[row][pc];
    for (int j = 0; j < pc; ++j) {
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), H[row][j].get_mpz_t(), piv.get_mpz_t());
      if (f != 0) {
        col_addmul(H, j, pc, -f);
        col_addmul(U, j, pc, -f);
      }
    }
    ++pc;
  }
  return {H, U};
}

Int det_int(const IntMat& A) {
  int n = static_cast<int>(A.size());
  if (n == 0 || col_count(A) != n) throw Error("det_int: not square");
  QMat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.at(i, j) = Rat(A[i][j]);
  // Fraction-free enough at desk scale: plain rational elimination.
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (M.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != col) {
      std::swap(M.rows[p], M.rows[col]);
      d = -d;
    }
    d *= M.at(col, col);
    Rat inv = 1 / M.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (M.at(i, col) == 0) continue;
      Rat f = M.at(i, col) * inv;
      for (int j = col; j < n; ++j) M.at(i, j) -= f * M.at(col, j);
    }
  }
  if (!is_integer(d)) throw Error("det_int: internal error");
  return d.get_num();
}

SubspaceBasis make_subspace(int ambient_dim, std::vector<QVec> basis) {
  for (const auto& v : basis)
    if (static_cast<int>(v.size()) != ambient_dim) throw Error("subspace: dimension mismatch");
  if (!basis.empty()) {
    QMat M = QMat::from_rows(basis);
    if (rank_exact(M) != static_cast<int>(basis.size()))
      throw Error("subspace: basis vectors are dependent");
  }
  return SubspaceBasis{ambient_dim, std::move(basis)};
}

SubspaceBasis subspace_from_int(int ambient_dim, const std::vector<IntVec>& basis) {
  std::vector<QVec> qb;
  qb.reserve(basis.size());
  for (const auto& v : basis) qb.push_back(to_qvec(v));
  return make_subspace(ambient_dim, std::move(qb));
}

namespace {

// Gram matrix inverse application: solves (B B^T) y = B x for the projection
// coefficients; projection = B^T y.
QMat basis_matrix(const SubspaceBasis& L) { return QMat::from_rows(L.basis); }

}  // namespace

QVec project_point(const SubspaceBasis& L, const QVec& x) {
  if (static_cast<int>(x.size()) != L.ambient_dim) throw Error("project_point: dimension mismatch");
  if (L.dim() == 0) return QVec(L.ambient_dim, Rat(0));
  QMat B = basis_matrix(L);
  QMat G = mat_mul(B, transpose(B));
  auto y = solve_exact(G, mat_vec(B, x));
  if (!y) throw Error("project_point: singular Gram matrix");
  QVec out(L.ambient_dim, Rat(0));
  for (int i = 0; i < L.dim(); ++i) out = add(out, scale(L.basis[i], (*y)[i]));
  return out;
}

bool in_subspace(const SubspaceBasis& L, const QVec& x) {
  return project_point(L, x) == x;
}

LatticeBasis projected_lattice_basis(const SubspaceBasis& L) {
  int n = L.ambient_dim;
  int k = L.dim();
  if (k == 0) throw Error("projected_lattice_basis: zero-dimensional subspace");

  // Coordinates (w.r.t. the subspace basis) of the projections of the unit
  // vectors: columns of C = (B B^T)^{-1} B.
  QMat B = basis_matrix(L);
  QMat G = mat_mul(B, transpose(B));
  QMat C(k, n);
  for (int j = 0; j < n; ++j) {
    QVec e(n, Rat(0));
    e[j] = 1;
    auto y = solve_exact(G, mat_vec(B, e));
    if (!y) throw Error("projected_lattice_basis: singular Gram matrix");
    for (int i = 0; i < k; ++i) C.at(i, j) = (*y)[i];
  }

  // Clear denominators, reduce the n generators to k by column HNF.
  Int d(1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), C.at(i, j).get_den().get_mpz_t());
  IntMat Ci(k, IntVec(n));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      Rat s = C.at(i, j) * Rat(d);
      if (!is_integer(s)) throw Error("projected_lattice_basis: internal scaling error");
      Ci[i][j] = s.get_num();
    }
  HnfResult h = hnf(Ci);

  LatticeBasis out;
  out.subspace = L;
  for (int col = 0; col < n; ++col) {
    bool zero = true;
    for (int i = 0; i < k; ++i)
      if (h.H[i][col] != 0) zero = false;
    if (zero) continue;
    QVec g(n, Rat(0));
    for (int i = 0; i < k; ++i) g = add(g, scale(L.basis[i], make_rat(h.H[i][col], d)));
    out.generators.push_back(std::move(g));
  }
  if (static_cast<int>(out.generators.size()) != k)
    throw Error("projected_lattice_basis: generator count mismatch");

  // Coordinate map M = (G^T G)^{-1} G^T for the generator matrix G.
  QMat Gen = transpose(QMat::from_rows(out.generators));  // n x k
  QMat Gt = transpose(Gen);                               // k x n
  QMat Gram = mat_mul(Gt, Gen);                           // k x k
  out.coord_map = QMat(k, n);
  for (int j = 0; j < n; ++j) {
    QVec col(k);
    for (int i = 0; i < k; ++i) col[i] = Gt.at(i, j);
    auto y = solve_exact(Gram, col);
    if (!y) throw Error("projected_lattice_basis: singular generator Gram matrix");
    for (int i = 0; i < k; ++i) out.coord_map.at(i, j) = (*y)[i];
  }
  return out;
}

QVec lattice_coords(const LatticeBasis& B, const QVec& p) {
  if (static_cast<int>(p.size()) != B.ambient_dim()) throw Error("lattice_coords: dimension mismatch");
  QVec y = mat_vec(B.coord_map, p);
  if (from_lattice_coords(B, y) != p) throw Error("lattice_coords: point outside the subspace");
  return y;
}

QVec from_lattice_coords(const LatticeBasis& B, const QVec& y) {
  if (static_cast<int>(y.size()) != B.dim()) throw Error("from_lattice_coords: dimension mismatch");
  QVec out(B.ambient_dim(), Rat(0));
  for (int i = 0; i < B.dim(); ++i) out = add(out, scale(B.generators[i], y[i]));
  return out;
}

}  // namespace latcut
