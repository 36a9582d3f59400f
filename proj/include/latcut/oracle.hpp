#pragma once

#include "latcut/hull2d.hpp"
#include "latcut/poly.hpp"

namespace latcut {

// Brute-force ground truth for the property suites. Deliberately shares no
// hull or conversion routines with the main code paths: enumeration is a
// plain grid scan and the hull is gift wrapping, so equality tests against
// the production pipeline are meaningful.
namespace oracle {

// Integer points of P inside the closed box, in lexicographic order.
std::vector<IntVec> enum_integer_points(const HPoly& P, const Box& box);
std::vector<IntVec> enum_integer_points_serial(const HPoly& P, const Box& box);

// Exact 2D convex hull by gift wrapping (counterclockwise cycle; duplicates
// and collinear interior points dropped).
VPoly naive_hull_2d(const std::vector<QVec>& points);

// conv(integer points of P in box) + cone(rec): callers certify that the box
// contains every hull vertex. In dimension 2 the point list is reduced to
// hull vertices; in dimension 3 all enumerated points are kept as
// generators.
VPoly naive_integer_hull(const HPoly& P, const Box& box, const std::vector<IntVec>& rec);

}  // namespace oracle

}  // namespace latcut
