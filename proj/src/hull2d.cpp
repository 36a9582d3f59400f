#include "latcut/hull2d.hpp"

#include <algorithm>

namespace latcut {

Cone2 make_cone2(QVec apex, IntVec ray1, IntVec ray2) {
  if (apex.size() != 2 || ray1.size() != 2 || ray2.size() != 2)
    throw Error("cone2: ambient dimension must be 2");
  IntVec r1 = primitive(ray1), r2 = primitive(ray2);
  if (cross2(r1, r2) == 0) throw Error("cone2: rays must be independent");
  return Cone2{std::move(apex), std::move(r1), std::move(r2)};
}

VPoly cone_to_vpoly(const Cone2& c) {
  VPoly v;
  v.dim = 2;
  v.vertices = {c.apex};
  v.rays = {c.ray1, c.ray2};
  return v;
}

Halfspace integer_hull_halfspace(const Halfspace& h) {
  return Halfspace{h.a, Rat(floor_rat(h.b))};
}

std::optional<std::pair<Int, Int>> integer_hull_strip(const IntVec& a, const Rat& lo, const Rat& hi) {
  if (content(a) != 1) throw Error("integer_hull_strip: normal must be primitive");
  Int l = ceil_rat(lo), h = floor_rat(hi);
  if (l > h) return std::nullopt;
  return std::make_pair(l, h);
}

Box candidate_region_box(const VPoly& V) {
  if (V.is_empty()) throw Error("candidate_region_box: empty polyhedron");
  int n = V.dim;
  QVec lo = V.vertices[0], hi = V.vertices[0];
  for (const auto& v : V.vertices)
    for (int d = 0; d < n; ++d) {
      if (v[d] < lo[d]) lo[d] = v[d];
      if (v[d] > hi[d]) hi[d] = v[d];
    }
  for (const auto& r : V.rays)
    for (int d = 0; d < n; ++d) {
      if (r[d] < 0) lo[d] += Rat(r[d]);
      if (r[d] > 0) hi[d] += Rat(r[d]);
    }
  return Box{std::move(lo), std::move(hi)};
}

namespace {

bool hs_holds_int(const Halfspace& h, const IntVec& z, bool strict) {
  Int lhs = dot(h.a, z) * h.b.get_den();
  return strict ? lhs < h.b.get_num() : lhs <= h.b.get_num();
}

bool all_hold_int(const HPoly& P, const IntVec& z, bool strict) {
  for (const auto& h : P.hs)
    if (!hs_holds_int(h, z, strict)) return false;
  return true;
}

// Lexicographically first integer point of P inside the closed box, if any.
std::optional<IntVec> first_point_in_box(const HPoly& P, const Box& box, bool strict) {
  long x0 = to_long(ceil_rat(box.lo[0])), x1 = to_long(floor_rat(box.hi[0]));
  long y0 = to_long(ceil_rat(box.lo[1])), y1 = to_long(floor_rat(box.hi[1]));
  for (long x = x0; x <= x1; ++x)
    for (long y = y0; y <= y1; ++y) {
      IntVec z{Int(x), Int(y)};
      if (all_hold_int(P, z, strict)) return z;
    }
  return std::nullopt;
}

Rat sum_abs(const IntVec& a) {
  Int s(0);
  for (const auto& x : a) s += abs(x);
  return Rat(s);
}

}  // namespace

VPoly integer_hull_pointed_2d(const VPoly& V) {
  if (V.dim != 2) throw Error("integer_hull_pointed_2d: ambient dimension must be 2");
  if (!V.lineality.empty()) throw Error("integer_hull_pointed_2d: input must be pointed");
  VPoly out;
  out.dim = 2;
  if (V.is_empty()) return out;

  HPoly hp = v_to_h_2d(V);
  Box box = candidate_region_box(V);
  long x0 = to_long(ceil_rat(box.lo[0])), x1 = to_long(floor_rat(box.hi[0]));
  long y0 = to_long(ceil_rat(box.lo[1])), y1 = to_long(floor_rat(box.hi[1]));
  std::vector<QVec> pts;
  for (long x = x0; x <= x1; ++x)
    for (long y = y0; y <= y1; ++y) {
      IntVec z{Int(x), Int(y)};
      if (all_hold_int(hp, z, false)) pts.push_back(to_qvec(z));
    }
  if (pts.empty()) return out;

  VPoly raw;
  raw.dim = 2;
  raw.vertices = convex_hull_2d(pts);
  for (const auto& r : V.rays) raw.rays.push_back(primitive(r));
  return h_to_v_2d(v_to_h_2d(raw));
}

VPoly integer_hull_2d(const HPoly& P) {
  if (P.dim != 2) throw Error("integer_hull_2d: ambient dimension must be 2");
  VPoly none;
  none.dim = 2;
  if (P.empty || !is_feasible(P)) return none;
  VPoly V = h_to_v_2d(P);
  if (V.lineality.empty()) return integer_hull_pointed_2d(V);
  if (V.lineality.size() == 2) return V;  // whole plane
  // Slab, halfplane or line: round each side.
  HPoly rounded{2, {}, false};
  for (const auto& h : v_to_h_2d(V).hs) rounded.hs.push_back(integer_hull_halfspace(h));
  if (!is_feasible(rounded)) return none;
  return h_to_v_2d(rounded);
}

namespace {

std::optional<QVec> integer_feasible_impl(const HPoly& P, bool strict) {
  if (P.dim != 2) throw Error("integer_feasible_2d: ambient dimension must be 2");
  if (P.empty) return std::nullopt;
  if (P.hs.empty()) return QVec(2, Rat(0));
  if (!is_feasible(P)) return std::nullopt;

  VPoly V = h_to_v_2d(P);
  HPoly Pc = v_to_h_2d(V);  // canonical facets only

  if (V.lineality.size() == 2) return QVec(2, Rat(0));

  if (V.lineality.size() == 1) {
    IntVec a0 = Pc.hs[0].a;
    bool has_hi = false, has_lo = false;
    Rat hi, lo;
    for (const auto& h : Pc.hs) {
      if (h.a == a0) {
        if (!has_hi || h.b < hi) hi = h.b;
        has_hi = true;
      } else {
        if (!has_lo || -h.b > lo) lo = -h.b;
        has_lo = true;
      }
    }
    Int t;
    if (strict) {
      Int tl = has_lo ? floor_rat(lo) + 1 : Int(0);
      Int th = has_hi ? ceil_rat(hi) - 1 : Int(0);
      if (has_lo && has_hi && tl > th) return std::nullopt;
      t = has_lo ? tl : th;
    } else {
      Int tl = has_lo ? ceil_rat(lo) : Int(0);
      Int th = has_hi ? floor_rat(hi) : Int(0);
      if (has_lo && has_hi && tl > th) return std::nullopt;
      t = has_lo ? tl : th;
    }
    return to_qvec(integer_point_on_line_2d(a0, t));
  }

  // Pointed.
  if (V.rays.empty()) {
    Box box = candidate_region_box(V);
    auto z = first_point_in_box(Pc, box, strict);
    if (!z) return std::nullopt;
    return to_qvec(*z);
  }

  if (V.rays.size() == 1) {
    // Step over the (bounded) fibers orthogonal to the recession direction.
    const IntVec& r = V.rays[0];
    IntVec u = rot90(r);
    Rat smin = dot(u, V.vertices[0]), smax = smin;
    for (const auto& v : V.vertices) {
      Rat s = dot(u, v);
      if (s < smin) smin = s;
      if (s > smax) smax = s;
    }
    long c0 = to_long(ceil_rat(smin)), c1 = to_long(floor_rat(smax));
    for (long c = c0; c <= c1; ++c) {
      IntVec z0 = integer_point_on_line_2d(u, Int(c));
      bool has_tl = false, has_th = false, dead = false;
      Rat tl, th;
      for (const auto& h : Pc.hs) {
        Rat coef(dot(h.a, r));
        Rat base(dot(h.a, z0));
        if (coef == 0) {
          if (strict ? base >= h.b : base > h.b) {
            dead = true;
            break;
          }
        } else if (coef > 0) {
          Rat bound = (h.b - base) / coef;
          if (!has_th || bound < th) th = bound;
          has_th = true;
        } else {
          Rat bound = (h.b - base) / coef;
          if (!has_tl || bound > tl) tl = bound;
          has_tl = true;
        }
      }
      if (dead) continue;
      Int t;
      if (strict) {
        Int a = has_tl ? floor_rat(tl) + 1 : Int(0);
        Int b = has_th ? ceil_rat(th) - 1 : Int(0);
        if (has_tl && has_th && a > b) continue;
        t = has_tl ? a : b;
      } else {
        Int a = has_tl ? ceil_rat(tl) : Int(0);
        Int b = has_th ? floor_rat(th) : Int(0);
        if (has_tl && has_th && a > b) continue;
        t = has_tl ? a : b;
      }
      QVec z = to_qvec(z0);
      z[0] += Rat(t) * Rat(r[0]);
      z[1] += Rat(t) * Rat(r[1]);
      return z;
    }
    return std::nullopt;
  }

  // Full-dimensional recession cone: walk deep enough along an interior
  // integer direction that the unit-cell rounding error cannot escape.
  IntVec d{V.rays[0][0] + V.rays[1][0], V.rays[0][1] + V.rays[1][1]};
  const QVec& v0 = V.vertices[0];
  QVec dq = to_qvec(d);
  Rat N(0);
  for (const auto& h : Pc.hs) {
    Rat slope = dot(h.a, dq);
    if (slope >= 0) throw Error("integer_feasible_2d: recession cone inconsistency");
    Rat need = (dot(h.a, v0) + sum_abs(h.a) / 2 + 1 - h.b) / (-slope);
    if (need > N) N = need;
  }
  QVec c = add(v0, scale(dq, N));
  QVec z{Rat(round_rat(c[0])), Rat(round_rat(c[1]))};
  if (strict ? !contains_strict(Pc, z) : !contains(Pc, z))
    throw Error("integer_feasible_2d: deep point fell outside");
  return z;
}

}  // namespace

std::optional<QVec> integer_feasible_2d(const HPoly& P) { return integer_feasible_impl(P, false); }

std::optional<QVec> integer_feasible_2d_strict(const HPoly& P) {
  return integer_feasible_impl(P, true);
}

}  // namespace latcut
