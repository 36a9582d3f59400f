#pragma once

#include "latcut/poly.hpp"

namespace latcut {

// A simplicial cone in the plane: rational apex, two independent primitive
// integer rays.
struct Cone2 {
  QVec apex;
  IntVec ray1;
  IntVec ray2;
};

Cone2 make_cone2(QVec apex, IntVec ray1, IntVec ray2);
VPoly cone_to_vpoly(const Cone2& c);

// rhs replaced by its floor; the normal is already primitive.
Halfspace integer_hull_halfspace(const Halfspace& h);

// Integer hull of { lo <= <a, x> <= hi } for a primitive: the rounded slab,
// or nullopt when no integer level fits.
std::optional<std::pair<Int, Int>> integer_hull_strip(const IntVec& a, const Rat& lo, const Rat& hi);

// Axis-aligned box certified to contain every vertex of the integer hull of
// a pointed V-polyhedron: bounding box of conv(vertices) plus the
// fundamental cell of the ray generators. Integer hull vertices outside it
// would admit subtracting an integer ray while staying inside, so none exist.
struct Box {
  QVec lo;
  QVec hi;
};
Box candidate_region_box(const VPoly& V);

// Exact integer hull of a pointed 2D polyhedron: enumerate the candidate
// cell, hull the surviving integer points, re-attach the recession cone.
// Empty output when the polyhedron has no integer point.
VPoly integer_hull_pointed_2d(const VPoly& V);

// Integer hull of any 2D H-polyhedron (splits by lineality dimension).
VPoly integer_hull_2d(const HPoly& P);

// An integer point of P, or nullopt. Exact: box enumeration when bounded,
// fiber stepping along the recession direction when a single ray, and a
// rounded deep point when the recession cone is full-dimensional.
std::optional<QVec> integer_feasible_2d(const HPoly& P);

// Same, but for the interior: all inequalities strict.
std::optional<QVec> integer_feasible_2d_strict(const HPoly& P);

}  // namespace latcut
