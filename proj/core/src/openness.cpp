#include "openchi/openness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "openchi/error.hpp"
#include "openchi/rng.hpp"
#include "openchi/simplex.hpp"

namespace openchi {

namespace {

// ---- face probing ----------------------------------------------------------
//
// face(S) = {x in P : rows in S tight, the rest satisfied}. A single LP
// maximizing a uniform slack t over the non-S rows decides emptiness and, when
// t* > 0, hands back a relative-interior point with S already closed. t* = 0
// means some extra row is tight on the whole face; those are found one LP
// each and the probe repeats on the enlarged set.

struct Face {
  std::vector<int> tight;
  RatVec point;
};

std::optional<Face> probe_face(const HPolytope& p, std::vector<int> tight_set) {
  const int nrows = static_cast<int>(p.ineqs.size());
  for (;;) {
    std::vector<char> in_set(nrows, 0);
    for (int r : tight_set) in_set[r] = 1;

    HPolytope sys;  // variables: x, then t
    sys.dim = p.dim + 1;
    auto widen = [&](const RatVec& a, const Rat& tcoef) {
      RatVec row = a;
      row.push_back(tcoef);
      return row;
    };
    for (int r = 0; r < nrows; ++r) {
      if (in_set[r])
        sys.eqs.push_back({widen(p.ineqs[r].first, Rat(0)), p.ineqs[r].second});
      else
        sys.ineqs.push_back({widen(p.ineqs[r].first, Rat(1)), p.ineqs[r].second});
    }
    for (const auto& [e, c] : p.eqs) sys.eqs.push_back({widen(e, Rat(0)), c});
    {
      RatVec cap(sys.dim, Rat(0));
      cap[p.dim] = 1;
      sys.ineqs.push_back({std::move(cap), Rat(1)});
    }
    RatVec obj(sys.dim, Rat(0));
    obj[p.dim] = 1;

    LpOutcome out = lp_optimize(sys, obj, true);
    if (out.status != LpStatus::Optimal || sgn(out.value) < 0) return std::nullopt;
    if (sgn(out.value) > 0) {
      Face f;
      f.tight = std::move(tight_set);
      f.point.assign(out.point.begin(), out.point.begin() + p.dim);
      return f;
    }

    // add every row that is tight across the whole face
    HPolytope face_sys;
    face_sys.dim = p.dim;
    for (int r = 0; r < nrows; ++r) {
      if (in_set[r])
        face_sys.eqs.push_back(p.ineqs[r]);
      else
        face_sys.ineqs.push_back(p.ineqs[r]);
    }
    for (const auto& eq : p.eqs) face_sys.eqs.push_back(eq);

    std::vector<int> grown = tight_set;
    for (int r = 0; r < nrows; ++r) {
      if (in_set[r]) continue;
      LpOutcome low = lp_optimize(face_sys, p.ineqs[r].first, false);
      require(low.status == LpStatus::Optimal, Ec::InternalCheckFailed,
              "face slack minimization failed");
      if (low.value == p.ineqs[r].second) grown.push_back(r);
    }
    std::sort(grown.begin(), grown.end());
    require(grown.size() > tight_set.size(), Ec::InternalCheckFailed,
            "zero uniform slack without an implied tight row");
    tight_set = std::move(grown);
  }
}

// preimage direction system: linear part of f maps d onto g inside the cone
HPolytope direction_system(const AffineMap& f, const PolyhedralCone& src,
                           const RatVec& g) {
  HPolytope sys;
  sys.dim = src.dim;
  for (const auto& a : src.le_rows) sys.ineqs.push_back({a, Rat(0)});
  for (const auto& e : src.eq_rows) sys.eqs.push_back({e, Rat(0)});
  for (int c = 0; c < f.target_dim; ++c) sys.eqs.push_back({f.matrix[c], g[c]});
  return sys;
}

// ---- float LP layer for the sampled estimate -------------------------------

struct FloatOps {
  static int sign(double v) {
    if (v > 1e-9) return 1;
    if (v < -1e-9) return -1;
    return 0;
  }
};

using FSimplex = detail::Simplex<double, FloatOps>;

std::vector<double> to_doubles(const RatVec& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_double(v[i]);
  return out;
}

}  // namespace

OpennessReport affine_map_is_open(const AffineMap& f, const HPolytope& p,
                                  const HPolytope& q, const OpennessOptions& opt) {
  require(f.source_dim == p.dim, Ec::DimensionMismatch, "map source vs domain");
  require(f.target_dim == q.dim, Ec::DimensionMismatch, "map target vs codomain");

  OpennessReport report;

  VPolytope pv = vertex_enumeration(p);
  if (pv.vertices.empty()) {
    require(!lp_feasible(q).feasible, Ec::NotSurjectiveOntoQ,
            "domain is empty but codomain is not");
    report.open = true;
    return report;
  }

  VPolytope img = image_polytope(f, pv);
  for (const auto& w : img.vertices)
    require(point_satisfies(q, w), Ec::NotSurjectiveOntoQ,
            "image is not contained in the codomain");
  VPolytope qv = vertex_enumeration(q);
  for (const auto& w : qv.vertices) {
    HPolytope sys = p;
    for (int c = 0; c < f.target_dim; ++c)
      sys.eqs.push_back({f.matrix[c], w[c] - f.offset[c]});
    require(lp_feasible(sys).feasible, Ec::NotSurjectiveOntoQ,
            "codomain vertex has no preimage");
  }

  // generator sets of codomain tangent cones repeat across faces; key them
  // by the tight set of Q
  std::map<std::vector<int>, std::vector<RatVec>> gen_cache;

  std::set<std::vector<int>> visited;
  std::queue<Face> pending;
  {
    std::optional<Face> root = probe_face(p, {});
    require(root.has_value(), Ec::InternalCheckFailed,
            "nonempty polytope probed empty");
    visited.insert(root->tight);
    pending.push(std::move(*root));
  }

  while (!pending.empty()) {
    Face face = std::move(pending.front());
    pending.pop();
    ++report.faces_checked;

    RatVec y = f.apply(face.point);
    PolyhedralCone src = tangent_cone(p, face.point);
    PolyhedralCone dst = tangent_cone(q, y);

    auto cached = gen_cache.find(dst.tight);
    if (cached == gen_cache.end())
      cached = gen_cache.emplace(dst.tight, cone_generators(dst)).first;
    const std::vector<RatVec>& gens = cached->second;

    FaceCertificate cert;
    cert.tight = face.tight;
    cert.point = face.point;
    for (const auto& g : gens) {
      Feasibility pre = lp_feasible(direction_system(f, src, g));
      if (!pre.feasible) {
        OpennessCounterexample ce;
        ce.tight = face.tight;
        ce.point = face.point;
        ce.direction = g;
        ce.farkas = std::move(pre.farkas);
        report.counterexample = std::move(ce);
        report.open = false;
        return report;
      }
      cert.directions.push_back(g);
      cert.preimages.push_back(std::move(pre.witness));
    }
    report.certificates.push_back(std::move(cert));

    std::vector<char> in_set(p.ineqs.size(), 0);
    for (int r : face.tight) in_set[r] = 1;
    for (int r = 0; r < static_cast<int>(p.ineqs.size()); ++r) {
      if (in_set[r]) continue;
      std::vector<int> raw = face.tight;
      raw.push_back(r);
      std::sort(raw.begin(), raw.end());
      std::optional<Face> child = probe_face(p, std::move(raw));
      if (!child) continue;
      if (!visited.insert(child->tight).second) continue;
      require(static_cast<int>(visited.size()) <= opt.face_budget,
              Ec::FaceBudgetExceeded, "face lattice exceeds the configured budget");
      pending.push(std::move(*child));
    }
  }

  report.open = true;
  return report;
}

double sampled_metric_openness(const AffineMap& f, const HPolytope& p,
                               const HPolytope& q, int sample_count,
                               double radius, const SampleOptions& opt) {
  require(f.source_dim == p.dim, Ec::DimensionMismatch, "map source vs domain");
  require(f.target_dim == q.dim, Ec::DimensionMismatch, "map target vs codomain");
  require(radius > 0, Ec::DimensionMismatch, "radius must be positive");

  VPolytope pv = vertex_enumeration(p);
  VPolytope qv = vertex_enumeration(q);
  if (pv.vertices.empty() || qv.vertices.size() < 2) return opt.c_hi;

  std::vector<std::vector<double>> pverts, qverts;
  for (const auto& v : pv.vertices) pverts.push_back(to_doubles(v));
  for (const auto& v : qv.vertices) qverts.push_back(to_doubles(v));

  std::vector<std::vector<double>> mat(f.target_dim);
  for (int c = 0; c < f.target_dim; ++c) mat[c] = to_doubles(f.matrix[c]);
  std::vector<double> off = to_doubles(f.offset);

  std::vector<std::pair<std::vector<double>, double>> qrows, prows;
  std::vector<std::pair<std::vector<double>, double>> qeqs, peqs;
  for (const auto& [a, b] : q.ineqs) qrows.push_back({to_doubles(a), rat_double(b)});
  for (const auto& [a, b] : q.eqs) qeqs.push_back({to_doubles(a), rat_double(b)});
  for (const auto& [a, b] : p.ineqs) prows.push_back({to_doubles(a), rat_double(b)});
  for (const auto& [a, b] : p.eqs) peqs.push_back({to_doubles(a), rat_double(b)});

  Rng rng(opt.seed);
  double modulus = opt.c_hi;

  for (int s = 0; s < sample_count; ++s) {
    // random point of P: positive convex combination of the vertices
    std::vector<double> weights(pverts.size());
    double total = 0;
    for (auto& w : weights) {
      w = rng.unit() + 1e-3;
      total += w;
    }
    std::vector<double> x(p.dim, 0.0);
    for (size_t k = 0; k < pverts.size(); ++k)
      for (int c = 0; c < p.dim; ++c) x[c] += (weights[k] / total) * pverts[k][c];

    std::vector<double> y(q.dim, 0.0);
    for (int c = 0; c < q.dim; ++c) {
      y[c] = off[c];
      for (int k = 0; k < p.dim; ++k) y[c] += mat[c][k] * x[k];
    }

    for (int dcount = 0; dcount < opt.directions; ++dcount) {
      // direction along the affine hull of Q, sup-norm one
      std::vector<double> u(q.dim, 0.0);
      double norm = 0;
      for (int attempt = 0; attempt < 16 && norm < 1e-12; ++attempt) {
        size_t i = rng.below(qverts.size());
        size_t j = rng.below(qverts.size());
        if (i == j) continue;
        norm = 0;
        for (int c = 0; c < q.dim; ++c) {
          u[c] = qverts[i][c] - qverts[j][c];
          norm = std::max(norm, std::fabs(u[c]));
        }
      }
      if (norm < 1e-12) continue;
      for (auto& v : u) v /= norm;

      // exit scale: largest c with y + c*radius*u still inside Q
      double exit_c;
      {
        FSimplex::Input in;
        in.nvars = 1;
        in.nonneg = {1};
        for (const auto& [a, b] : qrows) {
          double coef = 0, rhs = b;
          for (int c = 0; c < q.dim; ++c) {
            coef += a[c] * u[c];
            rhs -= a[c] * y[c];
          }
          in.rows.push_back({{coef * radius}, rhs, false});
        }
        for (const auto& [a, b] : qeqs) {
          double coef = 0, rhs = b;
          for (int c = 0; c < q.dim; ++c) {
            coef += a[c] * u[c];
            rhs -= a[c] * y[c];
          }
          in.rows.push_back({{coef * radius}, rhs, true});
        }
        in.rows.push_back({{1.0}, opt.c_hi, false});
        in.objective = {-1.0};
        auto out = FSimplex::solve(in, 100000);
        if (out.status != FSimplex::Status::Optimal) continue;
        exit_c = out.x[0];
      }
      if (exit_c < 1e-9) continue;  // ball meets Q only at y itself

      // cover scale: largest c whose boundary point has a preimage within
      // the radius ball around x; variables are c then the displacement d
      double cover_c;
      {
        FSimplex::Input in;
        in.nvars = 1 + p.dim;
        in.nonneg.assign(in.nvars, 0);
        in.nonneg[0] = 1;
        for (int c = 0; c < q.dim; ++c) {
          std::vector<double> row(in.nvars, 0.0);
          row[0] = -radius * u[c];
          for (int k = 0; k < p.dim; ++k) row[1 + k] = mat[c][k];
          in.rows.push_back({std::move(row), 0.0, true});
        }
        for (int k = 0; k < p.dim; ++k) {
          std::vector<double> hi(in.nvars, 0.0), lo(in.nvars, 0.0);
          hi[1 + k] = 1.0;
          lo[1 + k] = -1.0;
          in.rows.push_back({std::move(hi), radius, false});
          in.rows.push_back({std::move(lo), radius, false});
        }
        for (const auto& [a, b] : prows) {
          std::vector<double> row(in.nvars, 0.0);
          double rhs = b;
          for (int k = 0; k < p.dim; ++k) {
            row[1 + k] = a[k];
            rhs -= a[k] * x[k];
          }
          in.rows.push_back({std::move(row), rhs, false});
        }
        for (const auto& [a, b] : peqs) {
          std::vector<double> row(in.nvars, 0.0);
          double rhs = b;
          for (int k = 0; k < p.dim; ++k) {
            row[1 + k] = a[k];
            rhs -= a[k] * x[k];
          }
          in.rows.push_back({std::move(row), rhs, true});
        }
        {
          std::vector<double> cap(in.nvars, 0.0);
          cap[0] = 1.0;
          in.rows.push_back({std::move(cap), opt.c_hi, false});
        }
        in.objective.assign(in.nvars, 0.0);
        in.objective[0] = -1.0;
        auto out = FSimplex::solve(in, 100000);
        if (out.status != FSimplex::Status::Optimal) continue;
        cover_c = out.x[0];
      }

      // a direction that stays covered all the way to the boundary of Q
      // imposes no bound
      if (cover_c >= exit_c - 1e-9) continue;
      modulus = std::min(modulus, cover_c);
    }
  }
  return std::max(0.0, std::min(modulus, opt.c_hi));
}

}  // namespace openchi
