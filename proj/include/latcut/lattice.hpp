#pragma once

#include "latcut/linalg.hpp"

namespace latcut {

using IntMat = std::vector<IntVec>;  // row-major

// gcd of |entries|, 0 for the zero vector.
Int content(const IntVec& v);

// v / gcd(v). Throws on the zero vector.
IntVec primitive(const IntVec& v);

// Clears denominators and divides by the content: smallest integer vector
// with the same direction. Throws on zero.
IntVec primitive_direction(const QVec& v);

// (x, y) -> (-y, x)
IntVec rot90(const IntVec& a);

// An integer solution of <a, z> = c for primitive a (dim 2), via the
// extended Euclidean algorithm.
IntVec integer_point_on_line_2d(const IntVec& a, const Int& c);

struct HnfResult {
  IntMat H;  // column-style Hermite Normal Form, H = A * U
  IntMat U;  // unimodular, |det U| = 1
};

// Column HNF: integer column operations only. Pivots positive, entries to
// the left of a pivot reduced into [0, pivot), zero columns pushed right.
HnfResult hnf(const IntMat& A);

Int det_int(const IntMat& A);  // exact, small matrices only

// A linear subspace given by a rational basis. Every rational subspace is a
// lattice subspace (it has a basis of integer vectors), so no further
// validation is needed; k = 0 is allowed for the trivial subspace.
struct SubspaceBasis {
  int ambient_dim = 0;
  std::vector<QVec> basis;  // linearly independent

  int dim() const { return static_cast<int>(basis.size()); }
};

SubspaceBasis make_subspace(int ambient_dim, std::vector<QVec> basis);
SubspaceBasis subspace_from_int(int ambient_dim, const std::vector<IntVec>& basis);

// Orthogonal projection of x onto the subspace.
QVec project_point(const SubspaceBasis& L, const QVec& x);

bool in_subspace(const SubspaceBasis& L, const QVec& x);

// Basis of the lattice obtained by orthogonally projecting the integer
// lattice onto a subspace, together with the coordinate map that sends the
// projected lattice to the standard integer lattice.
struct LatticeBasis {
  SubspaceBasis subspace;
  std::vector<QVec> generators;  // k ambient vectors spanning the subspace
  QMat coord_map;                // k x n; coords(x) = coord_map * x

  int dim() const { return static_cast<int>(generators.size()); }
  int ambient_dim() const { return subspace.ambient_dim; }
};

// Projects the unit vectors, scales to a common denominator, and reduces the
// generator set by HNF. Throws if the subspace is zero-dimensional.
LatticeBasis projected_lattice_basis(const SubspaceBasis& L);

// Coefficients c with p = sum c_i * generator_i. p is in the projected
// lattice iff all coefficients are integral. Throws if p is outside the
// subspace.
QVec lattice_coords(const LatticeBasis& B, const QVec& p);

// sum y_i * generator_i back in ambient coordinates.
QVec from_lattice_coords(const LatticeBasis& B, const QVec& y);

}  // namespace latcut
