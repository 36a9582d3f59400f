#include "latcut/poly.hpp"

#include <algorithm>
#include <map>

namespace latcut {

bool operator==(const Halfspace& l, const Halfspace& r) { return l.a == r.a && l.b == r.b; }

Halfspace make_halfspace(IntVec a, Rat b) {
  Int g = content(a);
  if (g == 0) throw Error("halfspace: zero normal");
  if (g != 1) {
    for (auto& x : a) x /= g;
    b /= Rat(g);
  }
  return Halfspace{std::move(a), std::move(b)};
}

Halfspace make_halfspace(const QVec& a, const Rat& b) {
  Int l(1);
  for (const Rat& x : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  IntVec ai(a.size());
  for (size_t i = 0; i < a.size(); ++i) ai[i] = a[i].get_num() * (l / a[i].get_den());
  return make_halfspace(std::move(ai), b * Rat(l));
}

Rat eval(const Halfspace& h, const QVec& x) { return dot(h.a, x); }

bool contains(const Halfspace& h, const QVec& x) { return eval(h, x) <= h.b; }

bool contains(const HPoly& P, const QVec& x) {
  if (P.empty) return false;
  for (const auto& h : P.hs)
    if (!contains(h, x)) return false;
  return true;
}

bool contains_strict(const HPoly& P, const QVec& x) {
  if (P.empty) return false;
  for (const auto& h : P.hs)
    if (eval(h, x) >= h.b) return false;
  return true;
}

LpResult maximize(const HPoly& P, const QVec& objective) {
  if (P.empty) return {LpStatus::Infeasible, Rat(0), {}};
  std::vector<QVec> rows;
  QVec rhs;
  rows.reserve(P.hs.size());
  for (const auto& h : P.hs) {
    rows.push_back(to_qvec(h.a));
    rhs.push_back(h.b);
  }
  return lp_maximize(rows, rhs, objective);
}

bool is_feasible(const HPoly& P) {
  if (P.empty) return false;
  if (P.hs.empty()) return true;
  return maximize(P, QVec(P.dim, Rat(0))).status != LpStatus::Infeasible;
}

namespace {

bool lex_less_hs(const Halfspace& x, const Halfspace& y) {
  if (x.a != y.a) return lex_less(x.a, y.a);
  return x.b < y.b;
}

// Duplicate normals keep only the tightest right-hand side.
std::vector<Halfspace> dedupe_rows(const std::vector<Halfspace>& hs) {
  std::vector<Halfspace> out;
  for (const auto& h : hs) {
    bool merged = false;
    for (auto& k : out) {
      if (k.a == h.a) {
        if (h.b < k.b) k.b = h.b;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(h);
  }
  return out;
}

HPoly remove_redundant_lp(const HPoly& P) {
  std::vector<Halfspace> kept = dedupe_rows(P.hs);
  for (size_t i = 0; i < kept.size();) {
    HPoly rest{P.dim, {}, false};
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest.hs.push_back(kept[j]);
    LpResult r = maximize(rest, to_qvec(kept[i].a));
    bool redundant = r.status == LpStatus::Optimal && r.value <= kept[i].b;
    if (redundant)
      kept.erase(kept.begin() + i);
    else
      ++i;
  }
  return HPoly{P.dim, std::move(kept), false};
}

}  // namespace

HPoly remove_redundant(const HPoly& P) {
  if (P.empty || !is_feasible(P)) throw Error("remove_redundant: infeasible input");
  if (P.hs.empty()) return P;
  if (P.dim == 2) {
    // Exact representation round-trip; far cheaper than one LP per row.
    return v_to_h_2d(h_to_v_2d(P));
  }
  return remove_redundant_lp(P);
}

HPoly intersect(const std::vector<HPoly>& ps) {
  if (ps.empty()) throw Error("intersect: no operands");
  int dim = ps[0].dim;
  HPoly all{dim, {}, false};
  for (const auto& p : ps) {
    if (p.dim != dim) throw Error("intersect: ambient dimension mismatch");
    if (p.empty) return HPoly::empty_set(dim);
    for (const auto& h : p.hs) all.hs.push_back(h);
  }
  all.hs = dedupe_rows(all.hs);
  if (!is_feasible(all)) return HPoly::empty_set(dim);
  return remove_redundant(all);
}

HPoly intersect(const HPoly& p, const HPoly& q) { return intersect(std::vector<HPoly>{p, q}); }

SubspaceBasis lineality_space(const HPoly& P) {
  if (P.empty) throw Error("lineality_space: empty polyhedron");
  if (P.hs.empty()) {
    std::vector<QVec> full;
    for (int i = 0; i < P.dim; ++i) {
      QVec e(P.dim, Rat(0));
      e[i] = 1;
      full.push_back(std::move(e));
    }
    return make_subspace(P.dim, std::move(full));
  }
  QMat A(static_cast<int>(P.hs.size()), P.dim);
  for (size_t i = 0; i < P.hs.size(); ++i) A.rows[i] = to_qvec(P.hs[i].a);
  return make_subspace(P.dim, nullspace(A));
}

bool lex_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

bool lex_positive(const IntVec& a) {
  for (const auto& x : a) {
    if (x != 0) return x > 0;
  }
  return false;
}

Rat cross2(const QVec& a, const QVec& b) { return a[0] * b[1] - a[1] * b[0]; }
Int cross2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

std::vector<QVec> convex_hull_2d(std::vector<QVec> pts) {
  std::sort(pts.begin(), pts.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<QVec> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross2(sub(h[k - 1], h[k - 2]), sub(pts[i], h[k - 2])) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross2(sub(h[k - 1], h[k - 2]), sub(pts[i], h[k - 2])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  // All-collinear input collapses to the two extremes.
  if (h.size() < 2) {
    return {pts.front(), pts.back()};
  }
  return h;
}

namespace {

QVec point_on_level(const IntVec& a, const Rat& value) {
  // a * (value / <a,a>): a rational point with <a, p> = value.
  Rat nn(dot(a, a));
  QVec p(a.size());
  for (size_t i = 0; i < a.size(); ++i) p[i] = Rat(a[i]) * value / nn;
  return p;
}

std::vector<IntVec> sorted_unique_rays(std::vector<IntVec> rays) {
  std::sort(rays.begin(), rays.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

// Extreme rays of cone(S) for a pointed cone in 2D: drop every ray that is a
// strictly positive combination of two others.
std::vector<IntVec> extreme_rays_2d(std::vector<IntVec> S) {
  S = sorted_unique_rays(std::move(S));
  std::vector<IntVec> out;
  for (size_t i = 0; i < S.size(); ++i) {
    bool extreme = true;
    for (size_t s = 0; s < S.size() && extreme; ++s) {
      if (s == i) continue;
      for (size_t t = s + 1; t < S.size() && extreme; ++t) {
        if (t == i) continue;
        Int d = cross2(S[s], S[t]);
        if (d == 0) continue;
        Rat alpha = make_rat(cross2(S[i], S[t]), d);
        Rat beta = make_rat(cross2(S[s], S[i]), d);
        if (alpha > 0 && beta > 0) extreme = false;
      }
    }
    if (extreme) out.push_back(S[i]);
  }
  return out;
}

}  // namespace

VPoly h_to_v_2d(const HPoly& P) {
  if (P.dim != 2) throw Error("h_to_v_2d: ambient dimension must be 2");
  VPoly out;
  out.dim = 2;
  if (P.empty || !is_feasible(P)) return out;

  SubspaceBasis lin = lineality_space(P);
  if (lin.dim() == 2) {
    out.vertices.push_back(QVec(2, Rat(0)));
    out.lineality = {IntVec{1, 0}, IntVec{0, 1}};
    return out;
  }

  if (lin.dim() == 1) {
    // All normals are parallel: a slab, halfplane or line.
    IntVec d = primitive_direction(lin.basis[0]);
    if (!lex_positive(d)) {
      d[0] = -d[0];
      d[1] = -d[1];
    }
    IntVec a0 = P.hs[0].a;
    bool has_hi = false, has_lo = false;
    Rat hi, lo;
    for (const auto& h : P.hs) {
      if (h.a == a0) {
        if (!has_hi || h.b < hi) hi = h.b;
        has_hi = true;
      } else {
        // Normals are parallel and primitive, so the only other option is -a0.
        if (!has_lo || -h.b > lo) lo = -h.b;
        has_lo = true;
      }
    }
    out.lineality = {d};
    if (has_hi) out.vertices.push_back(point_on_level(a0, hi));
    if (has_lo && (!has_hi || lo != hi)) out.vertices.push_back(point_on_level(a0, lo));
    if (has_hi != has_lo) {
      IntVec r(2);
      r[0] = has_hi ? -a0[0] : a0[0];
      r[1] = has_hi ? -a0[1] : a0[1];
      out.rays.push_back(primitive(r));
    }
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const QVec& x, const QVec& y) { return lex_less(x, y); });
    return out;
  }

  // Pointed: vertices from tight pairs, extreme rays from tight directions.
  size_t m = P.hs.size();
  std::vector<QVec> verts;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      Int det = cross2(P.hs[i].a, P.hs[j].a);
      if (det == 0) continue;
      Rat dq(det);
      QVec x(2);
      x[0] = (P.hs[i].b * Rat(P.hs[j].a[1]) - P.hs[j].b * Rat(P.hs[i].a[1])) / dq;
      x[1] = (Rat(P.hs[i].a[0]) * P.hs[j].b - Rat(P.hs[j].a[0]) * P.hs[i].b) / dq;
      if (contains(P, x)) verts.push_back(std::move(x));
    }
  std::sort(verts.begin(), verts.end(), [](const QVec& x, const QVec& y) { return lex_less(x, y); });
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.empty()) throw Error("h_to_v_2d: pointed feasible polyhedron without vertices");
  out.vertices = std::move(verts);

  std::vector<IntVec> cand;
  for (const auto& h : P.hs) {
    IntVec w = rot90(h.a);
    IntVec wn{-w[0], -w[1]};
    for (const IntVec& r : {w, wn}) {
      bool inside = true;
      for (const auto& g : P.hs)
        if (dot(g.a, r) > 0) {
          inside = false;
          break;
        }
      if (inside) cand.push_back(r);
    }
  }
  out.rays = extreme_rays_2d(std::move(cand));
  return out;
}

HPoly v_to_h_2d(const VPoly& V) {
  if (V.dim != 2) throw Error("v_to_h_2d: ambient dimension must be 2");
  if (V.is_empty()) return HPoly::empty_set(2);

  std::vector<QVec> verts = V.vertices;
  std::sort(verts.begin(), verts.end(), [](const QVec& x, const QVec& y) { return lex_less(x, y); });
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  // Lineality folds into the ray set as +/- pairs.
  std::vector<IntVec> recdirs;
  for (const auto& r : V.rays) recdirs.push_back(primitive(r));
  for (const auto& l : V.lineality) {
    IntVec d = primitive(l);
    recdirs.push_back(d);
    recdirs.push_back(IntVec{-d[0], -d[1]});
  }
  recdirs = sorted_unique_rays(std::move(recdirs));

  // Directions spanning the affine hull.
  std::vector<IntVec> dirvecs = recdirs;
  for (size_t i = 1; i < verts.size(); ++i) dirvecs.push_back(primitive_direction(sub(verts[i], verts[0])));
  int adim = 0;
  if (!dirvecs.empty()) {
    adim = 1;
    for (size_t i = 1; i < dirvecs.size(); ++i)
      if (cross2(dirvecs[0], dirvecs[i]) != 0) {
        adim = 2;
        break;
      }
  }

  HPoly out{2, {}, false};

  if (adim == 0) {
    const QVec& v = verts[0];
    out.hs.push_back(Halfspace{IntVec{1, 0}, v[0]});
    out.hs.push_back(Halfspace{IntVec{-1, 0}, -v[0]});
    out.hs.push_back(Halfspace{IntVec{0, 1}, v[1]});
    out.hs.push_back(Halfspace{IntVec{0, -1}, -v[1]});
  } else if (adim == 1) {
    IntVec u = dirvecs[0];
    if (!lex_positive(u)) u = IntVec{-u[0], -u[1]};
    IntVec w = rot90(u);
    Rat c = dot(w, verts[0]);
    out.hs.push_back(Halfspace{w, c});
    out.hs.push_back(Halfspace{IntVec{-w[0], -w[1]}, -c});
    bool lo_inf = false, hi_inf = false;
    for (const auto& r : recdirs) (dot(u, r) > 0 ? hi_inf : lo_inf) = true;
    Rat m = dot(u, verts[0]), M = m;
    for (const auto& v : verts) {
      Rat e = dot(u, v);
      if (e < m) m = e;
      if (e > M) M = e;
    }
    if (!hi_inf) out.hs.push_back(Halfspace{u, M});
    if (!lo_inf) out.hs.push_back(Halfspace{IntVec{-u[0], -u[1]}, -m});
  } else {
    // Full-dimensional: candidate normals orthogonal to hull edges and
    // recession directions; a valid candidate is a facet iff its tight set
    // is one-dimensional.
    std::vector<QVec> hull = convex_hull_2d(verts);
    std::vector<IntVec> dirs = recdirs;
    if (hull.size() == 2) {
      dirs.push_back(primitive_direction(sub(hull[1], hull[0])));
    } else {
      for (size_t i = 0; i + 1 <= hull.size() && hull.size() >= 3; ++i)
        dirs.push_back(primitive_direction(sub(hull[(i + 1) % hull.size()], hull[i])));
    }
    std::vector<IntVec> cand;
    for (const auto& u : dirs) {
      IntVec w = rot90(u);
      cand.push_back(w);
      cand.push_back(IntVec{-w[0], -w[1]});
    }
    cand = sorted_unique_rays(std::move(cand));
    for (const auto& a : cand) {
      bool valid = true;
      for (const auto& r : recdirs)
        if (dot(a, r) > 0) {
          valid = false;
          break;
        }
      if (!valid) continue;
      Rat b = dot(a, verts[0]);
      for (const auto& v : verts) {
        Rat e = dot(a, v);
        if (e > b) b = e;
      }
      int tight_verts = 0;
      for (const auto& v : verts)
        if (dot(a, v) == b) ++tight_verts;
      int tight_rays = 0;
      for (const auto& r : recdirs)
        if (dot(a, r) == 0) ++tight_rays;
      if (tight_verts >= 2 || (tight_verts >= 1 && tight_rays >= 1))
        out.hs.push_back(Halfspace{a, b});
    }
  }

  out.hs = dedupe_rows(out.hs);
  std::sort(out.hs.begin(), out.hs.end(), lex_less_hs);
  return out;
}

HPoly fm_eliminate(const HPoly& P, std::vector<int> vars) {
  if (P.empty) return P;
  std::sort(vars.begin(), vars.end());
  std::vector<Halfspace> rows = dedupe_rows(P.hs);
  for (int v : vars) {
    std::vector<Halfspace> keep, pos, neg;
    for (auto& h : rows) {
      if (h.a[v] > 0)
        pos.push_back(h);
      else if (h.a[v] < 0)
        neg.push_back(h);
      else
        keep.push_back(h);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Int cp = p.a[v];
        Int cq = -q.a[v];
        IntVec a(P.dim);
        for (int j = 0; j < P.dim; ++j) a[j] = cq * p.a[j] + cp * q.a[j];
        Rat b = Rat(cq) * p.b + Rat(cp) * q.b;
        if (is_zero(a)) {
          if (b < 0) return HPoly::empty_set(P.dim);
          continue;
        }
        keep.push_back(make_halfspace(std::move(a), std::move(b)));
      }
    rows = dedupe_rows(keep);
    // Exact pruning after each elimination keeps the blowup in check.
    HPoly cur{P.dim, rows, false};
    if (!is_feasible(cur)) return HPoly::empty_set(P.dim);
    if (rows.size() > 8) rows = remove_redundant_lp(cur).hs;
  }
  return HPoly{P.dim, std::move(rows), false};
}

namespace {

bool normal_in_subspace(const SubspaceBasis& L, const IntVec& a) {
  return in_subspace(L, to_qvec(a));
}

}  // namespace

HPoly project_onto(const HPoly& P, const LatticeBasis& B) {
  int n = B.ambient_dim();
  int k = B.dim();
  if (P.dim != n) throw Error("project_onto: ambient dimension mismatch");
  if (P.empty) return HPoly::empty_set(k);

  bool direct = true;
  for (const auto& h : P.hs)
    if (!normal_in_subspace(B.subspace, h.a)) {
      direct = false;
      break;
    }

  if (direct) {
    HPoly out{k, {}, false};
    for (const auto& h : P.hs) {
      QVec c(k);
      for (int j = 0; j < k; ++j) c[j] = dot(h.a, B.generators[j]);
      out.hs.push_back(make_halfspace(c, h.b));
    }
    if (!is_feasible(out)) return HPoly::empty_set(k);
    return remove_redundant(out);
  }

  // General case: adjoin coordinates y = coord_map * x and eliminate x.
  HPoly sys{k + n, {}, false};
  for (const auto& h : P.hs) {
    QVec row(k + n, Rat(0));
    for (int j = 0; j < n; ++j) row[k + j] = Rat(h.a[j]);
    sys.hs.push_back(make_halfspace(row, h.b));
  }
  for (int t = 0; t < k; ++t) {
    QVec row(k + n, Rat(0));
    row[t] = 1;
    for (int j = 0; j < n; ++j) row[k + j] = -B.coord_map.at(t, j);
    sys.hs.push_back(make_halfspace(row, Rat(0)));
    for (auto& x : row) x = -x;
    sys.hs.push_back(make_halfspace(row, Rat(0)));
  }
  std::vector<int> elim;
  for (int j = 0; j < n; ++j) elim.push_back(k + j);
  HPoly flat = fm_eliminate(sys, elim);
  if (flat.empty) return HPoly::empty_set(k);
  HPoly out{k, {}, false};
  for (const auto& h : flat.hs) {
    IntVec c(h.a.begin(), h.a.begin() + k);
    for (int j = 0; j < n; ++j)
      if (h.a[k + j] != 0) throw Error("project_onto: elimination residue");
    out.hs.push_back(make_halfspace(std::move(c), h.b));
  }
  if (!is_feasible(out)) return HPoly::empty_set(k);
  return remove_redundant(out);
}

HPoly project_onto(const HPoly& P, const SubspaceBasis& L) {
  return project_onto(P, projected_lattice_basis(L));
}

HPoly lift_by_orthogonal_complement(const HPoly& Q, const LatticeBasis& B) {
  int n = B.ambient_dim();
  int k = B.dim();
  if (Q.dim != k) throw Error("lift_by_orthogonal_complement: coordinate dimension mismatch");
  if (Q.empty) return HPoly::empty_set(n);
  HPoly out{n, {}, false};
  for (const auto& h : Q.hs) {
    QVec amb(n, Rat(0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) amb[j] += Rat(h.a[i]) * B.coord_map.at(i, j);
    out.hs.push_back(make_halfspace(amb, h.b));
  }
  return out;
}

HPoly lift_by_orthogonal_complement(const HPoly& Q, const SubspaceBasis& L) {
  return lift_by_orthogonal_complement(Q, projected_lattice_basis(L));
}

bool hpoly_subset(const HPoly& P, const HPoly& Q) {
  if (P.dim != Q.dim) throw Error("hpoly_subset: dimension mismatch");
  if (P.empty || !is_feasible(P)) return true;
  if (Q.empty) return false;
  for (const auto& h : Q.hs) {
    LpResult r = maximize(P, to_qvec(h.a));
    if (r.status == LpStatus::Unbounded) return false;
    if (r.status == LpStatus::Optimal && r.value > h.b) return false;
  }
  return true;
}

bool hpoly_equal(const HPoly& P, const HPoly& Q) { return hpoly_subset(P, Q) && hpoly_subset(Q, P); }

}  // namespace latcut
