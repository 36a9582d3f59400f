#pragma once

#include "latcut/hull2d.hpp"

namespace latcut {

// D_{a,K}: the union { <a,x> <= K } or { <a,x> >= K+1 }; the complementary
// strip K <= <a,x> <= K+1 is the split set.
struct SplitDisjunction {
  IntVec a;  // primitive
  Int K;
};

bool operator==(const SplitDisjunction& l, const SplitDisjunction& r);

SplitDisjunction make_split(IntVec a, Int K);

struct SplitFamily {
  std::vector<SplitDisjunction> splits;
  std::string provenance;  // "explicit" or "box B=<n>"
};

// All primitive directions with infinity norm <= B (one sign per +/- pair),
// K over the instance's exact optimization range in that direction.
// Unbounded directions get a window of 2B+1 values anchored at the bounded
// side and are skipped when unbounded both ways; the result is always a
// relaxation of the true split closure, so pruning is sound.
SplitFamily box_split_family(const HPoly& P, int B);

// Exact H-representation of (H1 n H2)_I. Same halfspace: rounded rhs;
// parallel: rounded slab; otherwise project to the plane spanned by the two
// normals in lattice coordinates, hull there, and lift back.
HPoly two_halfspace_hull(const Halfspace& h1, const Halfspace& h2);

// Intersection of two_halfspace_hull over all unordered facet pairs,
// including the diagonal. Equals the integer hull in dimension 2; a valid
// relaxation of it in higher dimension. Expects a feasible, irredundant P.
HPoly facet_pair_closure(const HPoly& P);
HPoly facet_pair_closure_serial(const HPoly& P);

// conv(P n D_{a,K}), exact. V-representation union in 2D; an extended
// formulation eliminated by Fourier-Motzkin in higher dimension.
HPoly disjunctive_hull(const HPoly& P, const SplitDisjunction& d);

// Intersection of the disjunctive hulls over the family; contains the true
// split closure.
HPoly split_closure_family(const HPoly& P, const SplitFamily& F);
HPoly split_closure_family_serial(const HPoly& P, const SplitFamily& F);

// <a,x> <= floor(max <a,x> over P) when the maximum is finite.
std::optional<Halfspace> cg_cut_from_direction(const HPoly& P, const IntVec& a);

// Re-expresses a cut on the lattice coordinates of a subspace as the
// ambient-space inequality with normal inside the subspace.
Halfspace lift_cut(const Halfspace& cut, const LatticeBasis& B);
Halfspace lift_cut(const Halfspace& cut, const SubspaceBasis& L);

// One split disjunction per facet of the cone's integer hull whose shifted
// facet line still meets the cone; facets already tight get none. The split
// strip covers the apex together with the unit interval the shifted line
// crosses and a unit interval on the facet itself.
struct FacetSplit {
  Halfspace facet;  // facet of the integer hull, integral rhs
  std::optional<SplitDisjunction> split;
};

std::vector<FacetSplit> rank_ih_splits(const Cone2& C);

// Replays the two-round recipe: intersect the per-facet disjunctive hulls of
// the cone, then check that one rounding step in each facet direction
// recovers the integer hull exactly.
struct RankIhFacetCheck {
  Halfspace facet;
  std::optional<SplitDisjunction> split;
  Rat relaxation_max;  // max of the facet direction over the split relaxation
  Int rounded;         // floor of the maximum
  bool ok;             // rounded == facet rhs
};

struct RankIhCertificate {
  bool ok = false;
  std::vector<RankIhFacetCheck> facets;
};

RankIhCertificate verify_rank_ih(const Cone2& C);

// Checks, on one instance, that a split cut projects and lifts faithfully:
// (1) lifting the projected cut returns the cut, and (2) the projected cut
// is valid for the projected polyhedron minus the projected split interior.
// L must contain both the disjunction normal and the cut normal.
bool split_projection_check(const HPoly& P, const SplitDisjunction& d, const Halfspace& cut,
                            const SubspaceBasis& L);

}  // namespace latcut
