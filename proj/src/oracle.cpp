#include "latcut/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace latcut {
namespace oracle {

namespace {

bool holds(const Halfspace& h, const IntVec& z) {
  Int lhs(0);
  for (size_t i = 0; i < h.a.size(); ++i) lhs += h.a[i] * z[i];
  return lhs * h.b.get_den() <= h.b.get_num();
}

bool member(const HPoly& P, const IntVec& z) {
  for (const auto& h : P.hs)
    if (!holds(h, z)) return false;
  return true;
}

void scan(const HPoly& P, const std::vector<long>& lo, const std::vector<long>& hi, int d,
          IntVec& z, std::vector<IntVec>& out) {
  if (d == static_cast<int>(lo.size())) {
    if (member(P, z)) out.push_back(z);
    return;
  }
  for (long v = lo[d]; v <= hi[d]; ++v) {
    z[d] = v;
    scan(P, lo, hi, d + 1, z, out);
  }
}

void box_bounds(const Box& box, std::vector<long>& lo, std::vector<long>& hi) {
  size_t n = box.lo.size();
  lo.resize(n);
  hi.resize(n);
  for (size_t d = 0; d < n; ++d) {
    lo[d] = to_long(ceil_rat(box.lo[d]));
    hi[d] = to_long(floor_rat(box.hi[d]));
  }
}

}  // namespace

std::vector<IntVec> enum_integer_points_serial(const HPoly& P, const Box& box) {
  std::vector<IntVec> out;
  if (P.empty) return out;
  if (box.lo.size() != static_cast<size_t>(P.dim)) throw Error("enum_integer_points: box dimension mismatch");
  std::vector<long> lo, hi;
  box_bounds(box, lo, hi);
  for (size_t d = 0; d < lo.size(); ++d)
    if (lo[d] > hi[d]) return out;
  IntVec z(P.dim);
  scan(P, lo, hi, 0, z, out);
  return out;
}

std::vector<IntVec> enum_integer_points(const HPoly& P, const Box& box) {
  std::vector<IntVec> out;
  if (P.empty) return out;
  if (box.lo.size() != static_cast<size_t>(P.dim)) throw Error("enum_integer_points: box dimension mismatch");
  std::vector<long> lo, hi;
  box_bounds(box, lo, hi);
  for (size_t d = 0; d < lo.size(); ++d)
    if (lo[d] > hi[d]) return out;

  long n0 = hi[0] - lo[0] + 1;
  std::vector<std::vector<IntVec>> slices(static_cast<size_t>(n0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < n0; ++i) {
    IntVec z(P.dim);
    z[0] = lo[0] + i;
    scan(P, lo, hi, 1, z, slices[static_cast<size_t>(i)]);
  }
  for (auto& s : slices)
    for (auto& z : s) out.push_back(std::move(z));
  return out;
}

VPoly naive_hull_2d(const std::vector<QVec>& points) {
  VPoly out;
  out.dim = 2;
  std::vector<QVec> pts = points;
  std::sort(pts.begin(), pts.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return out;
  if (pts.size() <= 2) {
    out.vertices = pts;
    return out;
  }

  // Gift wrapping from the lexicographic minimum.
  size_t start = 0;
  std::vector<QVec> hull;
  size_t cur = start;
  do {
    hull.push_back(pts[cur]);
    size_t next = cur == 0 ? 1 : 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i == cur || i == next) continue;
      QVec a = sub(pts[next], pts[cur]);
      QVec b = sub(pts[i], pts[cur]);
      Rat c = cross2(a, b);
      // Take the most clockwise candidate; on ties the farthest one.
      if (c < 0 || (c == 0 && dot(b, b) > dot(a, a))) next = i;
    }
    cur = next;
    if (hull.size() > pts.size() + 1) throw Error("naive_hull_2d: wrap failed to close");
  } while (cur != start);

  // All-collinear inputs wrap to the two extremes.
  if (hull.size() == 2) {
    out.vertices = hull;
    return out;
  }
  // Gift wrapping above runs clockwise; report counterclockwise.
  std::reverse(hull.begin() + 1, hull.end());
  out.vertices = std::move(hull);
  return out;
}

VPoly naive_integer_hull(const HPoly& P, const Box& box, const std::vector<IntVec>& rec) {
  if (P.dim > 3) throw Error("naive_integer_hull: dimension above 3");
  std::vector<IntVec> pts = enum_integer_points(P, box);
  VPoly out;
  out.dim = P.dim;
  if (pts.empty()) return out;
  if (P.dim == 2) {
    std::vector<QVec> q;
    q.reserve(pts.size());
    for (const auto& z : pts) q.push_back(to_qvec(z));
    out = naive_hull_2d(q);
  } else {
    for (const auto& z : pts) out.vertices.push_back(to_qvec(z));
  }
  for (const auto& r : rec) out.rays.push_back(primitive(r));
  return out;
}

}  // namespace oracle
}  // namespace latcut
