#include "openchi/polytope.hpp"

#include <algorithm>
#include <set>

#include "openchi/error.hpp"

namespace openchi {

namespace {

// ---- double description state --------------------------------------------
//
// Cone is maintained as span(lineality) + cone(rays). Lineality is kept
// in reduced row echelon form; rays are reduced modulo the lineality and
// scaled to primitive integer vectors, which makes duplicates exact.

struct DDState {
  int dim;
  RatMat lin;                    // RREF basis
  std::vector<int> lin_pivots;
  std::vector<RatVec> rays;
  std::vector<RatVec> done_ineqs;  // inequality rows already processed
  RatMat done_eqs;

  void refresh_lin() {
    rref(lin);
    lin.erase(std::remove_if(lin.begin(), lin.end(), is_zero_vec), lin.end());
    lin_pivots.clear();
    for (const auto& row : lin)
      for (int c = 0; c < dim; ++c)
        if (sgn(row[c]) != 0) { lin_pivots.push_back(c); break; }
  }

  RatVec reduce(RatVec v) const {
    for (size_t i = 0; i < lin.size(); ++i) {
      int p = lin_pivots[i];
      if (sgn(v[p]) == 0) continue;
      Rat f = v[p];
      for (int c = 0; c < dim; ++c) v[c] -= f * lin[i][c];
    }
    return primitive_direction(std::move(v));
  }

  void canonicalize_rays() {
    std::vector<RatVec> out;
    std::set<RatVec> seen;
    for (auto& r : rays) {
      RatVec c = reduce(std::move(r));
      if (is_zero_vec(c)) continue;
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
    rays = std::move(out);
  }

  // Rays p and n span a 2-face of the current cone iff the constraints
  // tight at both leave exactly lineality + 2 dimensions free.
  bool adjacent(const RatVec& p, const RatVec& n) const {
    RatMat m = done_eqs;
    for (const auto& row : done_ineqs)
      if (sgn(dot(row, p)) == 0 && sgn(dot(row, n)) == 0) m.push_back(row);
    int free_dim = dim - rank_of(std::move(m));
    return free_dim == static_cast<int>(lin.size()) + 2;
  }

  void insert(const RatVec& a, bool is_eq) {
    int hit = -1;
    for (size_t i = 0; i < lin.size(); ++i)
      if (sgn(dot(a, lin[i])) != 0) { hit = static_cast<int>(i); break; }

    if (hit >= 0) {
      RatVec l0 = lin[hit];
      lin.erase(lin.begin() + hit);
      Rat al0 = dot(a, l0);
      for (auto& l : lin) {
        Rat f = dot(a, l) / al0;
        if (sgn(f) == 0) continue;
        for (int c = 0; c < dim; ++c) l[c] -= f * l0[c];
      }
      for (auto& r : rays) {
        Rat f = dot(a, r) / al0;
        if (sgn(f) == 0) continue;
        for (int c = 0; c < dim; ++c) r[c] -= f * l0[c];
      }
      if (!is_eq) {
        // the freed direction survives on the feasible side
        RatVec v = l0;
        if (sgn(al0) > 0)
          for (auto& x : v) x = -x;
        rays.push_back(std::move(v));
      }
      refresh_lin();
    } else {
      std::vector<RatVec> zero, neg, pos;
      for (auto& r : rays) {
        int s = sgn(dot(a, r));
        if (s == 0) zero.push_back(std::move(r));
        else if (s < 0) neg.push_back(std::move(r));
        else pos.push_back(std::move(r));
      }
      std::vector<RatVec> next = std::move(zero);
      if (!is_eq)
        for (auto& r : neg) next.push_back(r);
      for (const auto& p : pos)
        for (const auto& n : neg) {
          if (!adjacent(p, n)) continue;
          Rat ap = dot(a, p), an = dot(a, n);
          RatVec combo(dim);
          for (int c = 0; c < dim; ++c) combo[c] = ap * n[c] - an * p[c];
          next.push_back(std::move(combo));
        }
      rays = std::move(next);
    }

    if (is_eq) done_eqs.push_back(a);
    else done_ineqs.push_back(a);
    canonicalize_rays();
  }
};

RatVec normalize_equation(RatVec e) {
  e = primitive_direction(std::move(e));
  for (const auto& x : e) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : e) y = -y;
    break;
  }
  return e;
}

HPolytope empty_polytope(int dim) {
  HPolytope h;
  h.dim = dim;
  h.ineqs.push_back({RatVec(dim, Rat(0)), Rat(-1)});
  return h;
}

bool trivial_row(const std::pair<RatVec, Rat>& row) {
  return is_zero_vec(row.first) && sgn(row.second) >= 0;
}

}  // namespace

DDCone dd_cone(int dim, const std::vector<RatVec>& le_rows, const RatMat& eq_rows) {
  DDState st;
  st.dim = dim;
  st.lin.assign(dim, RatVec(dim, Rat(0)));
  for (int i = 0; i < dim; ++i) st.lin[i][i] = 1;
  st.refresh_lin();

  for (const auto& e : eq_rows) {
    require(static_cast<int>(e.size()) == dim, Ec::DimensionMismatch, "cone equation width");
    if (!is_zero_vec(e)) st.insert(e, true);
  }
  for (const auto& a : le_rows) {
    require(static_cast<int>(a.size()) == dim, Ec::DimensionMismatch, "cone row width");
    if (!is_zero_vec(a)) st.insert(a, false);
  }

  DDCone out;
  out.lineality = st.lin;
  out.rays = st.rays;
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

VPolytope vertex_enumeration(const HPolytope& h) {
  int d = h.dim;
  std::vector<RatVec> le;
  RatMat eq;
  for (const auto& [a, b] : h.ineqs) {
    RatVec row = a;
    row.push_back(-b);
    le.push_back(std::move(row));
  }
  {
    RatVec t_row(d + 1, Rat(0));
    t_row[d] = -1;
    le.push_back(std::move(t_row));
  }
  for (const auto& [e, c] : h.eqs) {
    RatVec row = e;
    row.push_back(-c);
    eq.push_back(std::move(row));
  }

  DDCone cone = dd_cone(d + 1, le, eq);

  VPolytope out;
  out.dim = d;
  bool nonempty = false;
  for (const auto& r : cone.rays)
    if (sgn(r[d]) > 0) { nonempty = true; break; }
  if (!nonempty) return out;  // empty polytope, no vertices

  require(cone.lineality.empty(), Ec::UnboundedInput,
          "input contains a line, not a polytope");
  for (const auto& r : cone.rays) {
    require(sgn(r[d]) > 0, Ec::UnboundedInput,
            "input has a recession direction, not a polytope");
    RatVec v(d);
    for (int c = 0; c < d; ++c) {
      v[c] = r[c] / r[d];
      v[c].canonicalize();
    }
    out.vertices.push_back(std::move(v));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

HPolytope hull(const VPolytope& v) {
  int d = v.dim;
  if (v.vertices.empty()) return empty_polytope(d);

  std::vector<RatVec> le;
  for (const auto& vert : v.vertices) {
    require(static_cast<int>(vert.size()) == d, Ec::DimensionMismatch, "vertex width");
    RatVec row = vert;
    row.push_back(-1);
    le.push_back(std::move(row));
  }
  DDCone cone = dd_cone(d + 1, le, {});

  HPolytope h;
  h.dim = d;
  for (const auto& l : cone.lineality) {
    RatVec a(l.begin(), l.begin() + d);
    if (is_zero_vec(a)) continue;
    RatVec e = normalize_equation(RatVec(l.begin(), l.end()));
    h.eqs.push_back({RatVec(e.begin(), e.begin() + d), e[d]});
  }
  for (const auto& r : cone.rays) {
    RatVec a(r.begin(), r.begin() + d);
    if (is_zero_vec(a)) continue;  // 0.x <= b, trivial
    h.ineqs.push_back({std::move(a), r[d]});
  }
  std::sort(h.ineqs.begin(), h.ineqs.end());
  std::sort(h.eqs.begin(), h.eqs.end());
  return h;
}

HPolytope prune_redundant(HPolytope h) {
  // canonicalize equations, detect 0 = nonzero
  if (!h.eqs.empty()) {
    RatMat aug;
    for (const auto& [e, c] : h.eqs) {
      RatVec row = e;
      row.push_back(c);
      aug.push_back(std::move(row));
    }
    rref(aug);
    std::vector<std::pair<RatVec, Rat>> eqs;
    for (const auto& row : aug) {
      RatVec a(row.begin(), row.begin() + h.dim);
      if (is_zero_vec(a)) {
        if (sgn(row[h.dim]) != 0) return empty_polytope(h.dim);
        continue;
      }
      RatVec e = normalize_equation(row);
      eqs.push_back({RatVec(e.begin(), e.begin() + h.dim), e[h.dim]});
    }
    h.eqs = std::move(eqs);
  }

  // normalize and dedupe inequalities
  {
    std::set<std::pair<RatVec, Rat>> seen;
    std::vector<std::pair<RatVec, Rat>> rows;
    for (auto& [a, b] : h.ineqs) {
      RatVec joint = a;
      joint.push_back(b);
      joint = primitive_direction(std::move(joint));
      std::pair<RatVec, Rat> row{RatVec(joint.begin(), joint.begin() + h.dim),
                                 joint[h.dim]};
      if (trivial_row(row)) continue;
      if (is_zero_vec(row.first) && sgn(row.second) < 0) return empty_polytope(h.dim);
      if (seen.insert(row).second) rows.push_back(std::move(row));
    }
    h.ineqs = std::move(rows);
  }

  for (size_t r = 0; r < h.ineqs.size();) {
    HPolytope rest = h;
    rest.ineqs.erase(rest.ineqs.begin() + r);
    LpOutcome best = lp_optimize(rest, h.ineqs[r].first, true);
    if (best.status == LpStatus::Infeasible) return empty_polytope(h.dim);
    if (best.status == LpStatus::Optimal && best.value <= h.ineqs[r].second)
      h.ineqs.erase(h.ineqs.begin() + r);
    else
      ++r;
  }
  return h;
}

HPolytope fm_project(const HPolytope& h, const std::vector<int>& keep) {
  for (size_t i = 0; i < keep.size(); ++i) {
    require(keep[i] >= 0 && keep[i] < h.dim, Ec::DimensionMismatch,
            "projection coordinate out of range");
    require(i == 0 || keep[i] > keep[i - 1], Ec::DimensionMismatch,
            "projection coordinates must be ascending");
  }
  std::vector<char> kept(h.dim, 0);
  for (int k : keep) kept[k] = 1;

  if (!lp_feasible(h).feasible) {
    HPolytope out;
    out.dim = static_cast<int>(keep.size());
    out.ineqs.push_back({RatVec(out.dim, Rat(0)), Rat(-1)});
    return out;
  }

  HPolytope cur = h;
  for (int v = 0; v < h.dim; ++v) {
    if (kept[v]) continue;

    // eliminate with an equation when possible
    int eq_idx = -1;
    for (size_t j = 0; j < cur.eqs.size(); ++j)
      if (sgn(cur.eqs[j].first[v]) != 0) { eq_idx = static_cast<int>(j); break; }
    if (eq_idx >= 0) {
      auto [e, c] = cur.eqs[eq_idx];
      cur.eqs.erase(cur.eqs.begin() + eq_idx);
      auto substitute = [&](std::pair<RatVec, Rat>& row) {
        Rat f = row.first[v] / e[v];
        if (sgn(f) == 0) return;
        for (int k = 0; k < h.dim; ++k) row.first[k] -= f * e[k];
        row.second -= f * c;
      };
      for (auto& row : cur.ineqs) substitute(row);
      for (auto& row : cur.eqs) substitute(row);
    } else {
      std::vector<std::pair<RatVec, Rat>> zero, neg, pos;
      for (auto& row : cur.ineqs) {
        int s = sgn(row.first[v]);
        if (s == 0) zero.push_back(std::move(row));
        else if (s < 0) neg.push_back(std::move(row));
        else pos.push_back(std::move(row));
      }
      for (const auto& p : pos)
        for (const auto& n : neg) {
          std::pair<RatVec, Rat> combo{RatVec(h.dim), Rat(0)};
          Rat cp = p.first[v], cn = -n.first[v];
          for (int k = 0; k < h.dim; ++k)
            combo.first[k] = cn * p.first[k] + cp * n.first[k];
          combo.second = cn * p.second + cp * n.second;
          zero.push_back(std::move(combo));
        }
      cur.ineqs = std::move(zero);
    }
    cur = prune_redundant(std::move(cur));
    // prune_redundant may normalize to the canonical empty form
    if (cur.ineqs.size() == 1 && is_zero_vec(cur.ineqs[0].first) &&
        sgn(cur.ineqs[0].second) < 0)
      break;
  }

  HPolytope out;
  out.dim = static_cast<int>(keep.size());
  auto restrict_row = [&](const std::pair<RatVec, Rat>& row) {
    RatVec a(out.dim);
    for (int i = 0; i < out.dim; ++i) a[i] = row.first[keep[i]];
    return std::make_pair(std::move(a), row.second);
  };
  for (const auto& row : cur.ineqs) {
    for (int v = 0; v < h.dim; ++v)
      require(kept[v] || sgn(row.first[v]) == 0, Ec::InternalCheckFailed,
              "projection left a dropped coordinate behind");
    out.ineqs.push_back(restrict_row(row));
  }
  for (const auto& row : cur.eqs) {
    for (int v = 0; v < h.dim; ++v)
      require(kept[v] || sgn(row.first[v]) == 0, Ec::InternalCheckFailed,
              "projection left a dropped coordinate behind");
    out.eqs.push_back(restrict_row(row));
  }
  return out;
}

VPolytope image_polytope(const AffineMap& f, const VPolytope& v) {
  require(f.source_dim == v.dim, Ec::DimensionMismatch, "map does not fit the polytope");
  std::vector<RatVec> pts;
  {
    std::set<RatVec> seen;
    for (const auto& vert : v.vertices) {
      RatVec img = f.apply(vert);
      if (seen.insert(img).second) pts.push_back(std::move(img));
    }
  }
  std::sort(pts.begin(), pts.end());

  // drop points inside the hull of the others
  for (size_t i = 0; i < pts.size();) {
    if (pts.size() == 1) break;
    HPolytope sys;
    sys.dim = static_cast<int>(pts.size()) - 1;
    for (int k = 0; k < sys.dim; ++k) {
      RatVec a(sys.dim, Rat(0));
      a[k] = -1;
      sys.ineqs.push_back({std::move(a), Rat(0)});
    }
    RatVec ones(sys.dim, Rat(1));
    sys.eqs.push_back({ones, Rat(1)});
    for (int c = 0; c < f.target_dim; ++c) {
      RatVec row(sys.dim);
      int col = 0;
      for (size_t j = 0; j < pts.size(); ++j) {
        if (j == i) continue;
        row[col++] = pts[j][c];
      }
      sys.eqs.push_back({std::move(row), pts[i][c]});
    }
    if (lp_feasible(sys).feasible)
      pts.erase(pts.begin() + i);
    else
      ++i;
  }

  VPolytope out;
  out.dim = f.target_dim;
  out.vertices = std::move(pts);
  return out;
}

PolyhedralCone tangent_cone(const HPolytope& h, const RatVec& point) {
  require(point_satisfies(h, point), Ec::PointOutside,
          "tangent cone requested at a point outside the polytope");
  PolyhedralCone cone;
  cone.dim = h.dim;
  for (size_t r = 0; r < h.ineqs.size(); ++r)
    if (dot(h.ineqs[r].first, point) == h.ineqs[r].second) {
      cone.le_rows.push_back(h.ineqs[r].first);
      cone.tight.push_back(static_cast<int>(r));
    }
  for (const auto& [e, c] : h.eqs) cone.eq_rows.push_back(e);
  return cone;
}

std::vector<RatVec> cone_generators(const PolyhedralCone& cone) {
  DDCone dd = dd_cone(cone.dim, cone.le_rows, cone.eq_rows);
  std::vector<RatVec> gens;
  for (const auto& l : dd.lineality) {
    gens.push_back(l);
    RatVec m(l.size());
    for (size_t i = 0; i < l.size(); ++i) m[i] = -l[i];
    gens.push_back(std::move(m));
  }
  for (const auto& r : dd.rays) gens.push_back(r);
  return gens;
}

}  // namespace openchi
