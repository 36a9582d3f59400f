#include "latcut/closures.hpp"

#include <algorithm>

#include "latcut/parallel.hpp"

namespace latcut {

bool operator==(const SplitDisjunction& l, const SplitDisjunction& r) {
  return l.a == r.a && l.K == r.K;
}

SplitDisjunction make_split(IntVec a, Int K) {
  if (content(a) != 1) throw Error("split: normal must be primitive");
  return SplitDisjunction{std::move(a), std::move(K)};
}

namespace {

// Enumerates primitive integer vectors with infinity norm <= B, one
// representative per +/- pair (lexicographically positive).
std::vector<IntVec> primitive_directions(int dim, int B) {
  std::vector<IntVec> out;
  std::vector<long> v(dim, -B);
  for (;;) {
    IntVec a(dim);
    for (int i = 0; i < dim; ++i) a[i] = v[i];
    if (!is_zero(a) && content(a) == 1 && lex_positive(a)) out.push_back(a);
    int d = dim - 1;
    while (d >= 0 && v[d] == B) v[d--] = -B;
    if (d < 0) break;
    ++v[d];
  }
  return out;
}

Halfspace upper_row(const IntVec& a, const Rat& b) { return Halfspace{a, b}; }

Halfspace lower_row(const IntVec& a, const Rat& b) {
  IntVec neg(a.size());
  for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  return Halfspace{std::move(neg), -b};
}

}  // namespace

SplitFamily box_split_family(const HPoly& P, int B) {
  if (B < 1) throw Error("split family: box bound must be positive");
  if (P.empty || !is_feasible(P)) throw Error("split family: infeasible polyhedron");
  SplitFamily F;
  F.provenance = "box B=" + std::to_string(B);
  for (const auto& a : primitive_directions(P.dim, B)) {
    QVec obj = to_qvec(a);
    LpResult up = maximize(P, obj);
    LpResult dn = lp_minimize_over(P, obj);
    Int klo, khi;
    if (up.status == LpStatus::Optimal && dn.status == LpStatus::Optimal) {
      klo = ceil_rat(dn.value) - 1;
      khi = floor_rat(up.value);
    } else if (dn.status == LpStatus::Optimal) {
      klo = ceil_rat(dn.value) - 1;
      khi = klo + 2 * B;
    } else if (up.status == LpStatus::Optimal) {
      khi = floor_rat(up.value);
      klo = khi - 2 * B;
    } else {
      continue;  // unbounded both ways: no finite anchor
    }
    for (Int K = klo; K <= khi; ++K) F.splits.push_back(SplitDisjunction{a, K});
  }
  return F;
}

HPoly two_halfspace_hull(const Halfspace& h1, const Halfspace& h2) {
  int n = h1.dim();
  if (h2.dim() != n) throw Error("two_halfspace_hull: dimension mismatch");

  if (h1.a == h2.a) {
    Halfspace tight{h1.a, h1.b < h2.b ? h1.b : h2.b};
    return HPoly{n, {integer_hull_halfspace(tight)}, false};
  }

  IntVec neg(h1.a.size());
  for (size_t i = 0; i < h1.a.size(); ++i) neg[i] = -h1.a[i];
  if (h2.a == neg) {
    // Parallel strip lo <= <a1, x> <= hi.
    Rat lo = -h2.b, hi = h1.b;
    if (hi < lo) return HPoly::empty_set(n);
    auto s = integer_hull_strip(h1.a, lo, hi);
    if (!s) return HPoly::empty_set(n);
    return HPoly{n, {upper_row(h1.a, Rat(s->second)), lower_row(h1.a, Rat(s->first))}, false};
  }

  // Independent normals: everything happens in the plane they span.
  SubspaceBasis L = subspace_from_int(n, {h1.a, h2.a});
  LatticeBasis B = projected_lattice_basis(L);
  HPoly P{n, {h1, h2}, false};
  HPoly Q = project_onto(P, B);
  VPoly hull = integer_hull_pointed_2d(h_to_v_2d(Q));
  if (hull.is_empty()) return HPoly::empty_set(n);
  return lift_by_orthogonal_complement(v_to_h_2d(hull), B);
}

namespace {

HPoly pair_closure(const HPoly& P, bool parallel) {
  if (P.empty || !is_feasible(P)) throw Error("facet_pair_closure: infeasible polyhedron");
  size_t m = P.hs.size();
  if (m == 0) return HPoly::whole(P.dim);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) pairs.emplace_back(i, j);
  std::vector<HPoly> hulls(pairs.size());
  auto job = [&](long k) {
    hulls[k] = two_halfspace_hull(P.hs[pairs[k].first], P.hs[pairs[k].second]);
  };
  if (parallel) {
    detail::parallel_for(static_cast<long>(pairs.size()), job);
  } else {
    for (long k = 0; k < static_cast<long>(pairs.size()); ++k) job(k);
  }
  return intersect(hulls);
}

}  // namespace

HPoly facet_pair_closure(const HPoly& P) { return pair_closure(P, true); }
HPoly facet_pair_closure_serial(const HPoly& P) { return pair_closure(P, false); }

HPoly disjunctive_hull(const HPoly& P, const SplitDisjunction& d) {
  if (P.empty) return P;
  int n = P.dim;
  if (static_cast<int>(d.a.size()) != n) throw Error("disjunctive_hull: dimension mismatch");
  HPoly side1{n, {upper_row(d.a, Rat(d.K))}, false};
  HPoly side2{n, {lower_row(d.a, Rat(d.K + 1))}, false};
  HPoly piece1 = intersect(P, side1);
  HPoly piece2 = intersect(P, side2);
  if (piece1.empty && piece2.empty) return HPoly::empty_set(n);
  if (piece1.empty) return piece2;
  if (piece2.empty) return piece1;

  if (n == 2) {
    VPoly v1 = h_to_v_2d(piece1), v2 = h_to_v_2d(piece2);
    VPoly u;
    u.dim = 2;
    u.vertices = v1.vertices;
    u.vertices.insert(u.vertices.end(), v2.vertices.begin(), v2.vertices.end());
    u.rays = v1.rays;
    u.rays.insert(u.rays.end(), v2.rays.begin(), v2.rays.end());
    u.lineality = v1.lineality;
    u.lineality.insert(u.lineality.end(), v2.lineality.begin(), v2.lineality.end());
    return v_to_h_2d(u);
  }

  // Extended formulation over (x, y, lambda): y plays the first piece's
  // point scaled by lambda, x - y the second piece's scaled by 1 - lambda.
  int total = 2 * n + 1;
  HPoly sys{total, {}, false};
  auto add_row = [&](const QVec& row, const Rat& b) { sys.hs.push_back(make_halfspace(row, b)); };
  for (const auto& h : piece1.hs) {
    QVec row(total, Rat(0));
    for (int j = 0; j < n; ++j) row[n + j] = Rat(h.a[j]);
    row[2 * n] = -h.b;
    add_row(row, Rat(0));
  }
  for (const auto& h : piece2.hs) {
    QVec row(total, Rat(0));
    for (int j = 0; j < n; ++j) {
      row[j] = Rat(h.a[j]);
      row[n + j] = Rat(-h.a[j]);
    }
    row[2 * n] = h.b;
    add_row(row, h.b);
  }
  {
    QVec row(total, Rat(0));
    row[2 * n] = -1;
    add_row(row, Rat(0));
    row[2 * n] = 1;
    add_row(row, Rat(1));
  }
  std::vector<int> elim;
  for (int j = 0; j < n + 1; ++j) elim.push_back(n + j);
  HPoly flat = fm_eliminate(sys, elim);
  if (flat.empty) throw Error("disjunctive_hull: projection lost feasibility");
  HPoly out{n, {}, false};
  for (const auto& h : flat.hs) {
    IntVec c(h.a.begin(), h.a.begin() + n);
    if (is_zero(c)) continue;
    out.hs.push_back(make_halfspace(std::move(c), h.b));
  }
  return remove_redundant(out);
}

namespace {

HPoly family_closure(const HPoly& P, const SplitFamily& F, bool parallel) {
  if (P.empty || !is_feasible(P)) throw Error("split_closure_family: infeasible polyhedron");
  std::vector<HPoly> hulls(F.splits.size() + 1);
  hulls[0] = P;
  auto job = [&](long k) { hulls[k + 1] = disjunctive_hull(P, F.splits[k]); };
  if (parallel) {
    detail::parallel_for(static_cast<long>(F.splits.size()), job);
  } else {
    for (long k = 0; k < static_cast<long>(F.splits.size()); ++k) job(k);
  }
  return intersect(hulls);
}

}  // namespace

HPoly split_closure_family(const HPoly& P, const SplitFamily& F) {
  return family_closure(P, F, true);
}
HPoly split_closure_family_serial(const HPoly& P, const SplitFamily& F) {
  return family_closure(P, F, false);
}

std::optional<Halfspace> cg_cut_from_direction(const HPoly& P, const IntVec& a) {
  if (content(a) != 1) throw Error("cg_cut_from_direction: direction must be primitive");
  LpResult r = maximize(P, to_qvec(a));
  if (r.status == LpStatus::Infeasible) throw Error("cg_cut_from_direction: infeasible polyhedron");
  if (r.status == LpStatus::Unbounded) return std::nullopt;
  return Halfspace{a, Rat(floor_rat(r.value))};
}

Halfspace lift_cut(const Halfspace& cut, const LatticeBasis& B) {
  int n = B.ambient_dim();
  int k = B.dim();
  if (cut.dim() != k) throw Error("lift_cut: coordinate dimension mismatch");
  QVec amb(n, Rat(0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) amb[j] += Rat(cut.a[i]) * B.coord_map.at(i, j);
  return make_halfspace(amb, cut.b);
}

Halfspace lift_cut(const Halfspace& cut, const SubspaceBasis& L) {
  return lift_cut(cut, projected_lattice_basis(L));
}

namespace {

struct FacetGeometry {
  Halfspace facet;   // (a, delta), delta integral
  IntVec w;          // rot90(a): direction of the facet line
  std::vector<Int> tight_params;  // integer hull vertices on the facet, in w-units
  bool ray_up = false;    // facet recedes along +w
  bool ray_down = false;  // facet recedes along -w
};

Int param_on_line(const IntVec& w, const QVec& base, const QVec& p) {
  // p = base + t*w with p, base on the same line.
  int j = w[0] != 0 ? 0 : 1;
  Rat t = (p[j] - base[j]) / Rat(w[j]);
  if (!is_integer(t)) throw Error("rank_ih: non-integral facet parameter");
  return t.get_num();
}

}  // namespace

std::vector<FacetSplit> rank_ih_splits(const Cone2& C) {
  VPoly cone = cone_to_vpoly(C);
  HPoly cone_hp = v_to_h_2d(cone);
  VPoly hullv = integer_hull_pointed_2d(cone);
  if (hullv.is_empty()) throw Error("rank_ih: cone has no integer points");
  HPoly hull_hp = v_to_h_2d(hullv);

  std::vector<FacetSplit> out;
  for (const auto& f : hull_hp.hs) {
    if (!is_integer(f.b)) throw Error("rank_ih: non-integral facet rhs");
    Int delta = f.b.get_num();
    Rat apex_val = dot(f.a, C.apex);
    if (apex_val < Rat(delta + 1)) {
      out.push_back(FacetSplit{f, std::nullopt});
      continue;
    }

    IntVec w = rot90(f.a);
    // The shifted facet line meets the cone in a segment free of integer
    // points, hence inside a single unit interval.
    IntVec zs = integer_point_on_line_2d(f.a, delta + 1);
    QVec zs_q = to_qvec(zs);
    bool has_lo = false, has_hi = false;
    Rat tlo, thi;
    for (const auto& g : cone_hp.hs) {
      Rat coef(dot(g.a, w));
      Rat base = dot(g.a, zs_q);
      if (coef == 0) {
        if (base > g.b) throw Error("rank_ih: shifted line misses the cone");
        continue;
      }
      Rat bound = (g.b - base) / coef;
      if (coef > 0) {
        if (!has_hi || bound < thi) thi = bound;
        has_hi = true;
      } else {
        if (!has_lo || bound > tlo) tlo = bound;
        has_lo = true;
      }
    }
    if (!has_lo || !has_hi) throw Error("rank_ih: unbounded shifted section");
    Int m = floor_rat(tlo);
    if (Rat(m) == tlo || thi >= Rat(m + 1))
      throw Error("rank_ih: shifted section spans an integer point");
    IntVec u1{zs[0] + m * w[0], zs[1] + m * w[1]};

    // Unit intervals available on the facet itself.
    IntVec zf = integer_point_on_line_2d(f.a, delta);
    QVec zf_q = to_qvec(zf);
    FacetGeometry geo;
    geo.w = w;
    for (const auto& v : hullv.vertices)
      if (dot(f.a, v) == f.b) geo.tight_params.push_back(param_on_line(w, zf_q, v));
    for (const auto& r : hullv.rays) {
      if (dot(f.a, r) != 0) continue;
      if (r == w)
        geo.ray_up = true;
      else
        geo.ray_down = true;
    }
    if (geo.tight_params.empty()) throw Error("rank_ih: facet without integral vertex");
    Int jlo = *std::min_element(geo.tight_params.begin(), geo.tight_params.end());
    Int jhi = *std::max_element(geo.tight_params.begin(), geo.tight_params.end());
    bool lo_open = geo.ray_down, hi_open = geo.ray_up;
    if (!lo_open && !hi_open && jhi == jlo)
      throw Error("rank_ih: facet shorter than a unit interval");

    // Left endpoint lexicographically minimal among unit intervals on the
    // facet; for rays pointing the lex-decreasing way, the vertex-adjacent
    // interval.
    Int j;
    if (lex_positive(w)) {
      j = lo_open ? jhi - 1 : jlo;
    } else {
      j = hi_open ? jlo : jhi - 1;
    }
    IntVec u1p{zf[0] + j * w[0], zf[1] + j * w[1]};

    IntVec dvec{u1p[0] - u1[0], u1p[1] - u1[1]};
    if (content(dvec) != 1) throw Error("rank_ih: cross direction not primitive");
    IntVec g = rot90(dvec);
    Int c1 = dot(g, u1);
    if (dot(g, u1p) != c1) throw Error("rank_ih: split boundary mismatch");
    Int step = dot(g, w);
    if (step != 1 && step != -1) throw Error("rank_ih: split width mismatch");
    Int K = step == 1 ? c1 : c1 - 1;
    Rat apex_level = dot(g, C.apex);
    if (apex_level < Rat(K) || apex_level > Rat(K + 1))
      throw Error("rank_ih: split does not cover the apex");
    out.push_back(FacetSplit{f, make_split(g, K)});
  }
  return out;
}

RankIhCertificate verify_rank_ih(const Cone2& C) {
  HPoly cone_hp = v_to_h_2d(cone_to_vpoly(C));
  std::vector<FacetSplit> splits = rank_ih_splits(C);
  std::vector<HPoly> pieces{cone_hp};
  for (const auto& fs : splits)
    if (fs.split) pieces.push_back(disjunctive_hull(cone_hp, *fs.split));
  HPoly relaxed = intersect(pieces);

  RankIhCertificate cert;
  cert.ok = true;
  for (const auto& fs : splits) {
    LpResult r = maximize(relaxed, to_qvec(fs.facet.a));
    if (r.status != LpStatus::Optimal) throw Error("rank_ih: relaxation unbounded in facet direction");
    RankIhFacetCheck chk;
    chk.facet = fs.facet;
    chk.split = fs.split;
    chk.relaxation_max = r.value;
    chk.rounded = floor_rat(r.value);
    chk.ok = Rat(chk.rounded) == fs.facet.b;
    cert.ok = cert.ok && chk.ok;
    cert.facets.push_back(std::move(chk));
  }
  return cert;
}

bool split_projection_check(const HPoly& P, const SplitDisjunction& d, const Halfspace& cut,
                            const SubspaceBasis& L) {
  if (!in_subspace(L, to_qvec(d.a)) || !in_subspace(L, to_qvec(cut.a)))
    throw Error("split_projection_check: subspace misses a normal");
  // The cut must be valid for P minus the split interior.
  HPoly hull = disjunctive_hull(P, d);
  if (!hull.empty) {
    LpResult r = maximize(hull, to_qvec(cut.a));
    if (r.status == LpStatus::Unbounded || (r.status == LpStatus::Optimal && r.value > cut.b))
      throw Error("split_projection_check: cut is not valid for the disjunctive hull");
  }

  LatticeBasis B = projected_lattice_basis(L);
  int k = B.dim();

  auto project_normal = [&](const IntVec& a) {
    IntVec c(k);
    for (int j = 0; j < k; ++j) {
      Rat e = dot(a, B.generators[j]);
      if (!is_integer(e)) throw Error("split_projection_check: non-integral projected normal");
      c[j] = e.get_num();
    }
    return c;
  };

  Halfspace cut_proj{project_normal(cut.a), cut.b};
  if (content(cut_proj.a) != 1) return false;
  if (!(lift_cut(cut_proj, B) == cut)) return false;

  IntVec split_proj = project_normal(d.a);
  if (content(split_proj) != 1) return false;
  HPoly Q = project_onto(P, B);
  HPoly hullQ = disjunctive_hull(Q, SplitDisjunction{split_proj, d.K});
  if (hullQ.empty) return true;
  LpResult r = maximize(hullQ, to_qvec(cut_proj.a));
  if (r.status == LpStatus::Unbounded) return false;
  return r.status == LpStatus::Optimal && r.value <= cut_proj.b;
}

}  // namespace latcut
