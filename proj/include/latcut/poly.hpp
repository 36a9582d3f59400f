#pragma once

#include "latcut/lattice.hpp"
#include "latcut/lp.hpp"

namespace latcut {

// { x : <a, x> <= b } with a primitive integer normal, so floor-rounding of
// the right-hand side is well defined.
struct Halfspace {
  IntVec a;
  Rat b;

  int dim() const { return static_cast<int>(a.size()); }
};

bool operator==(const Halfspace& l, const Halfspace& r);

// Rescales to a primitive normal; throws on a zero normal.
Halfspace make_halfspace(IntVec a, Rat b);
Halfspace make_halfspace(const QVec& a, const Rat& b);

// H-representation. Emptiness is an explicit marker, never an unsatisfiable
// inequality list; an empty halfspace list with empty=false is all of R^n.
struct HPoly {
  int dim = 0;
  std::vector<Halfspace> hs;
  bool empty = false;

  static HPoly whole(int n) { return HPoly{n, {}, false}; }
  static HPoly empty_set(int n) { return HPoly{n, {}, true}; }
};

// V-representation: conv(vertices) + cone(rays) + span(lineality).
// Empty iff the vertex list is empty.
struct VPoly {
  int dim = 0;
  std::vector<QVec> vertices;
  std::vector<IntVec> rays;       // primitive
  std::vector<IntVec> lineality;  // primitive, independent

  bool is_empty() const { return vertices.empty(); }
};

Rat eval(const Halfspace& h, const QVec& x);
bool contains(const Halfspace& h, const QVec& x);
bool contains(const HPoly& P, const QVec& x);
bool contains_strict(const HPoly& P, const QVec& x);

// Exact LP over P. Infeasible when P is empty.
LpResult maximize(const HPoly& P, const QVec& objective);
LpResult minimize(const HPoly& P, const QVec& objective);
inline LpResult maximize(const HPoly& P, const IntVec& objective) {
  return maximize(P, to_qvec(objective));
}
inline LpResult minimize(const HPoly& P, const IntVec& objective) {
  return minimize(P, to_qvec(objective));
}

bool is_feasible(const HPoly& P);

// Minimal H-representation of the same set; every kept inequality is
// irredundant, certified by exact LP. Throws on infeasible input.
HPoly remove_redundant(const HPoly& P);

// Concatenates and prunes; detects emptiness and returns the explicit marker.
HPoly intersect(const std::vector<HPoly>& ps);
HPoly intersect(const HPoly& p, const HPoly& q);

// Basis of { d : <a_i, d> = 0 for all i }. May be zero-dimensional.
SubspaceBasis lineality_space(const HPoly& P);

// Exact 2D representation conversion. Output of h_to_v_2d is canonical:
// vertex/ray/lineality lists sorted, rays and lineality primitive with a
// fixed sign convention.
VPoly h_to_v_2d(const HPoly& P);
HPoly v_to_h_2d(const VPoly& V);

// Fourier-Motzkin: eliminates the given variables (ascending index order),
// pruning redundant rows after each elimination.
HPoly fm_eliminate(const HPoly& P, std::vector<int> vars);

// H-representation of the orthogonal projection of P onto the subspace,
// expressed in lattice coordinates (the projected lattice becomes Z^k).
// Direct constraint transport when every normal lies in the subspace,
// Fourier-Motzkin otherwise.
HPoly project_onto(const HPoly& P, const LatticeBasis& B);
HPoly project_onto(const HPoly& P, const SubspaceBasis& L);

// From lattice coordinates of the subspace back to R^n: the preimage
// Q + L^perp. Every output normal lies in the subspace.
HPoly lift_by_orthogonal_complement(const HPoly& Q, const LatticeBasis& B);
HPoly lift_by_orthogonal_complement(const HPoly& Q, const SubspaceBasis& L);

// Set-level comparisons via LP (representation independent).
bool hpoly_subset(const HPoly& P, const HPoly& Q);
bool hpoly_equal(const HPoly& P, const HPoly& Q);

// Lexicographic comparisons used for canonical ordering.
bool lex_less(const QVec& a, const QVec& b);
bool lex_less(const IntVec& a, const IntVec& b);
bool lex_positive(const IntVec& a);

Rat cross2(const QVec& a, const QVec& b);
Int cross2(const IntVec& a, const IntVec& b);

// Counterclockwise convex hull cycle (collinear interior points dropped,
// duplicates removed); 0, 1 or 2 points pass through.
std::vector<QVec> convex_hull_2d(std::vector<QVec> pts);

}  // namespace latcut
