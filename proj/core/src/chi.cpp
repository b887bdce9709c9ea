#include "openchi/chi.hpp"

#include <algorithm>

#include "openchi/error.hpp"

namespace openchi {

HPolytope simplex_polytope(int n) {
  HPolytope h;
  h.dim = n;
  for (int i = 0; i < n; ++i) {
    RatVec a(n, Rat(0));
    a[i] = -1;
    h.ineqs.push_back({std::move(a), Rat(0)});
  }
  h.eqs.push_back({RatVec(n, Rat(1)), Rat(1)});
  return h;
}

AffineMap pushforward_matrix(const FiniteSpace& src, const FiniteSpace& dst,
                             const SpaceMap& f) {
  require(f.source == src.id && f.target == dst.id, Ec::SpaceMismatch,
          "map endpoints do not match the given spaces");
  AffineMap m;
  m.source_dim = src.size();
  m.target_dim = dst.size();
  m.matrix.assign(m.target_dim, RatVec(m.source_dim, Rat(0)));
  m.offset.assign(m.target_dim, Rat(0));
  for (int x = 0; x < src.size(); ++x) m.matrix[f(x)][x] = 1;
  return m;
}

ChiMap build_chi(const Diagram& d) {
  ChiMap chi;
  chi.diagram = d;
  chi.limit = compute_limit(d);
  require(chi.limit.size() > 0, Ec::EmptyLimit,
          "diagram limit is empty, the map has no domain");

  const int k = d.poset.n();
  const int n = chi.limit.size();
  chi.block_offset.resize(k);
  int off = 0;
  for (int i = 0; i < k; ++i) {
    chi.block_offset[i] = off;
    off += d.space(i).size();
  }
  chi.codomain_dim = off;

  chi.map.source_dim = n;
  chi.map.target_dim = off;
  chi.map.matrix.assign(off, RatVec(n, Rat(0)));
  chi.map.offset.assign(off, Rat(0));
  for (int e = 0; e < n; ++e)
    for (int i = 0; i < k; ++i)
      chi.map.matrix[chi.block_offset[i] + chi.limit.elements[e][i]][e] = 1;

  chi.domain = simplex_polytope(n);

  chi.codomain.dim = off;
  for (int i = 0; i < k; ++i) {
    for (int p = 0; p < d.space(i).size(); ++p) {
      RatVec a(off, Rat(0));
      a[chi.block_offset[i] + p] = -1;
      chi.codomain.ineqs.push_back({std::move(a), Rat(0)});
    }
    RatVec ones(off, Rat(0));
    for (int p = 0; p < d.space(i).size(); ++p)
      ones[chi.block_offset[i] + p] = 1;
    chi.codomain.eqs.push_back({std::move(ones), Rat(1)});
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !d.poset.is_geq(i, j)) continue;
      const SpaceMap& phi = d.map_for(i, j);
      for (int q = 0; q < d.space(j).size(); ++q) {
        RatVec a(off, Rat(0));
        for (int p = 0; p < d.space(i).size(); ++p)
          if (phi(p) == q) a[chi.block_offset[i] + p] = 1;
        a[chi.block_offset[j] + q] -= 1;
        chi.codomain.eqs.push_back({std::move(a), Rat(0)});
      }
    }
  return chi;
}

MarginalFamily chi_apply(const ChiMap& chi, const Measure& tau) {
  require(tau.space == "lim", Ec::SpaceMismatch, "measure is not on the limit space");
  require(static_cast<int>(tau.weights.size()) == chi.limit.size(),
          Ec::SpaceMismatch, "measure size does not match the limit");
  MarginalFamily fam;
  const Diagram& d = chi.diagram;
  for (int i = 0; i < d.poset.n(); ++i) {
    RatVec w(d.space(i).size(), Rat(0));
    for (int e = 0; e < chi.limit.size(); ++e)
      w[chi.limit.elements[e][i]] += tau.weights[e];
    fam.components.push_back(make_measure(d.space(i), std::move(w)));
  }
  return fam;
}

RatVec family_vector(const ChiMap& chi, const MarginalFamily& fam) {
  validate_family_shape(chi.diagram, fam);
  RatVec v(chi.codomain_dim, Rat(0));
  for (int i = 0; i < chi.diagram.poset.n(); ++i)
    for (size_t p = 0; p < fam.components[i].weights.size(); ++p)
      v[chi.block_offset[i] + p] = fam.components[i].weights[p];
  return v;
}

MarginalFamily family_from_vector(const ChiMap& chi, const RatVec& v) {
  require(static_cast<int>(v.size()) == chi.codomain_dim, Ec::DimensionMismatch,
          "family vector has the wrong length");
  MarginalFamily fam;
  for (int i = 0; i < chi.diagram.poset.n(); ++i) {
    const FiniteSpace& sp = chi.diagram.space(i);
    RatVec w(v.begin() + chi.block_offset[i],
             v.begin() + chi.block_offset[i] + sp.size());
    fam.components.push_back(make_measure(sp, std::move(w)));
  }
  return fam;
}

HPolytope maximal_embedded_codomain(const ChiMap& chi) {
  std::vector<int> keep;
  for (int i : chi.diagram.poset.maximal)
    for (int p = 0; p < chi.diagram.space(i).size(); ++p)
      keep.push_back(chi.block_offset[i] + p);
  std::sort(keep.begin(), keep.end());
  return fm_project(chi.codomain, keep);
}

SurjectivityReport check_chi_surjective(const ChiMap& chi) {
  SurjectivityReport report;
  VPolytope verts = vertex_enumeration(chi.codomain);
  report.vertices = verts.vertices;
  for (size_t v = 0; v < verts.vertices.size(); ++v) {
    HPolytope sys = chi.domain;
    for (int c = 0; c < chi.map.target_dim; ++c)
      sys.eqs.push_back({chi.map.matrix[c], verts.vertices[v][c]});
    Feasibility fs = lp_feasible(sys);
    if (!fs.feasible) {
      report.surjective = false;
      report.unreached = static_cast<int>(v);
      report.farkas = std::move(fs.farkas);
      return report;
    }
    report.witnesses.push_back(std::move(fs.witness));
  }
  report.surjective = true;
  return report;
}

ChiOpennessReport check_chi_open(const ChiMap& chi, const OpennessOptions& opt) {
  ChiOpennessReport report;
  SurjectivityReport surj = check_chi_surjective(chi);
  report.onto_codomain = surj.surjective;
  if (surj.surjective) {
    report.target = chi.codomain;
  } else {
    VPolytope dom_verts = vertex_enumeration(chi.domain);
    report.target = hull(image_polytope(chi.map, dom_verts));
  }
  report.exact = affine_map_is_open(chi.map, chi.domain, report.target, opt);
  report.sampled_modulus =
      sampled_metric_openness(chi.map, chi.domain, report.target, 100, 1e-3);
  return report;
}

PreimageResult preimage_witness(const ChiMap& chi, const MarginalFamily& family) {
  ConsistencyReport consistency = check_consistent_family(chi.diagram, family);
  if (!consistency.consistent) {
    const FamilyViolation& v = *consistency.violation;
    fail(Ec::InconsistentFamily,
         "pushforward of component " + chi.diagram.poset.elements[v.upper] +
             " disagrees with component " + chi.diagram.poset.elements[v.lower] +
             " at point " + v.point);
  }

  RatVec target = family_vector(chi, family);
  HPolytope sys = chi.domain;
  for (int c = 0; c < chi.map.target_dim; ++c)
    sys.eqs.push_back({chi.map.matrix[c], target[c]});
  Feasibility fs = lp_feasible(sys);

  PreimageResult result;
  if (!fs.feasible) {
    result.farkas = std::move(fs.farkas);
    return result;
  }
  Measure tau = make_measure(limit_as_space(chi.diagram, chi.limit),
                             std::move(fs.witness));
  MarginalFamily check = chi_apply(chi, tau);
  for (size_t i = 0; i < family.components.size(); ++i)
    require(equal_measures(check.components[i], family.components[i]),
            Ec::InternalCheckFailed, "preimage witness fails to marginalize back");
  result.witness = std::move(tau);
  return result;
}

bool verify_composition_identity(const Cone& cone, const Diagram& d) {
  LimitSpace lim = compute_limit(d);
  if (lim.size() == 0) {
    // a valid cone over an empty limit has an empty apex; nothing to compare
    require(cone.apex.size() == 0, Ec::LegIncoherent,
            "cone legs cannot land in an empty limit");
    return true;
  }

  ChiMap chi = build_chi(d);
  SpaceMap into_limit = cone_characteristic_map(d, lim, cone);
  AffineMap through =
      pushforward_matrix(cone.apex, limit_as_space(d, lim), into_limit);

  // left side: marginalize after pushing the apex measure into the limit
  RatMat left = mat_mul(chi.map.matrix, through.matrix);

  // right side: marginalize along the cone legs directly
  RatMat right(chi.codomain_dim, RatVec(cone.apex.size(), Rat(0)));
  for (int t = 0; t < cone.apex.size(); ++t)
    for (int i = 0; i < d.poset.n(); ++i)
      right[chi.block_offset[i] + cone.legs[i][t]][t] = 1;

  return left == right;
}

FunctorPreservationReport check_functor_preserves(const Cone& cone,
                                                  const Diagram& d) {
  LimitSpace lim = compute_limit(d);
  ConeVerdict base = check_cone_open_multicommutative(d, lim, cone);
  require(base.open_multicommutative, Ec::ConeNotOpenMulticommutative,
          "cone does not reach limit element " + base.missed_element);

  FunctorPreservationReport report;
  SpaceMap into_limit = cone_characteristic_map(d, lim, cone);
  FiniteSpace lim_space = limit_as_space(d, lim);
  AffineMap induced = pushforward_matrix(cone.apex, lim_space, into_limit);

  // a surjection of finite sets marginalizes the simplex onto the simplex
  report.induced_map_surjective = is_surjective(into_limit, lim_space);
  report.induced_map_open = affine_map_is_open(
      induced, simplex_polytope(cone.apex.size()), simplex_polytope(lim.size()));

  ChiMap chi = build_chi(d);
  report.chi_surjective = check_chi_surjective(chi);
  report.chi_open = check_chi_open(chi);

  report.preserved = report.induced_map_surjective &&
                     report.induced_map_open.open &&
                     report.chi_surjective.surjective && report.chi_open.exact.open;
  return report;
}

}  // namespace openchi
