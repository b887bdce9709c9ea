#include "openchi/measure.hpp"

#include "openchi/error.hpp"

namespace openchi {

Measure make_measure(const FiniteSpace& sp, RatVec weights) {
  require(weights.size() == sp.points.size(), Ec::UnknownPoint,
          "measure on '" + sp.id + "' needs one weight per point");
  Rat total(0);
  for (size_t p = 0; p < weights.size(); ++p) {
    require(sgn(weights[p]) >= 0, Ec::NotAProbabilityMeasure,
            "negative weight at '" + sp.points[p] + "' in '" + sp.id + "'");
    total += weights[p];
  }
  require(total == 1, Ec::NotAProbabilityMeasure,
          "weights on '" + sp.id + "' sum to " + rat_str(total));
  return Measure{sp.id, std::move(weights)};
}

Measure measure_from_labels(const FiniteSpace& sp,
                            const std::map<std::string, Rat>& weights) {
  RatVec w(sp.points.size(), Rat(0));
  for (const auto& [label, value] : weights) {
    int p = sp.point_index(label);
    require(p >= 0, Ec::UnknownPoint, "'" + label + "' is not a point of '" + sp.id + "'");
    w[p] = value;
  }
  return make_measure(sp, std::move(w));
}

std::map<std::string, Rat> measure_to_labels(const FiniteSpace& sp, const Measure& mu) {
  std::map<std::string, Rat> out;
  for (int p = 0; p < sp.size(); ++p)
    if (sgn(mu.weights[p]) != 0) out[sp.points[p]] = mu.weights[p];
  return out;
}

Measure point_mass(const FiniteSpace& sp, int p) {
  RatVec w(sp.points.size(), Rat(0));
  w[p] = 1;
  return make_measure(sp, std::move(w));
}

bool equal_measures(const Measure& a, const Measure& b) {
  return a.space == b.space && a.weights == b.weights;
}

Measure pushforward(const FiniteSpace& src, const FiniteSpace& dst,
                    const SpaceMap& f, const Measure& mu) {
  require(mu.space == src.id, Ec::SpaceMismatch,
          "measure lives on '" + mu.space + "', map starts at '" + src.id + "'");
  require(f.source == src.id && f.target == dst.id, Ec::SpaceMismatch,
          "map " + f.source + "->" + f.target + " does not match the spaces");
  RatVec w(dst.points.size(), Rat(0));
  for (size_t p = 0; p < mu.weights.size(); ++p)
    if (sgn(mu.weights[p]) != 0) w[f.assignment[p]] += mu.weights[p];
  return Measure{dst.id, std::move(w)};
}

FiniteSpace product_space(const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<std::string> labels;
  labels.reserve(x.points.size() * y.points.size());
  for (const auto& px : x.points)
    for (const auto& py : y.points) labels.push_back("(" + px + "," + py + ")");
  return make_space(x.id + "*" + y.id, std::move(labels));
}

SpacedMeasure product_measure(const FiniteSpace& x, const Measure& mx,
                              const FiniteSpace& y, const Measure& my) {
  require(mx.space == x.id && my.space == y.id, Ec::SpaceMismatch,
          "product factors do not match their spaces");
  FiniteSpace prod = product_space(x, y);
  RatVec w;
  w.reserve(mx.weights.size() * my.weights.size());
  for (const auto& wx : mx.weights)
    for (const auto& wy : my.weights) w.push_back(wx * wy);
  Measure mu = make_measure(prod, std::move(w));
  return SpacedMeasure{std::move(prod), std::move(mu)};
}

SpacedMeasure graph_pushforward(const FiniteSpace& x, const FiniteSpace& y,
                                const SpaceMap& f, const Measure& mu) {
  require(mu.space == x.id, Ec::SpaceMismatch,
          "measure lives on '" + mu.space + "', expected '" + x.id + "'");
  require(f.source == x.id && f.target == y.id, Ec::SpaceMismatch,
          "graph map " + f.source + "->" + f.target + " does not match the spaces");
  FiniteSpace prod = product_space(x, y);
  RatVec w(prod.points.size(), Rat(0));
  int ny = y.size();
  for (int p = 0; p < x.size(); ++p) w[p * ny + f.assignment[p]] = mu.weights[p];
  Measure tau = make_measure(prod, std::move(w));
  return SpacedMeasure{std::move(prod), std::move(tau)};
}

Coupling gluing_coupling(const FiniteSpace& a, const Measure& mu_a,
                         const FiniteSpace& b, const Measure& mu_b,
                         const FiniteSpace& s, const SpaceMap& qa,
                         const SpaceMap& qb) {
  Measure nu_a = pushforward(a, s, qa, mu_a);
  Measure nu_b = pushforward(b, s, qb, mu_b);
  for (int v = 0; v < s.size(); ++v)
    require(nu_a.weights[v] == nu_b.weights[v], Ec::MarginalMismatch,
            "pushforwards onto '" + s.id + "' differ at '" + s.points[v] + "'");

  Coupling c;
  std::vector<std::string> labels;
  std::vector<int> to_a, to_b;
  RatVec w;
  for (int pa = 0; pa < a.size(); ++pa)
    for (int pb = 0; pb < b.size(); ++pb) {
      int v = qa.assignment[pa];
      if (v != qb.assignment[pb]) continue;
      c.pairs.emplace_back(pa, pb);
      labels.push_back("(" + a.points[pa] + "," + b.points[pb] + ")");
      to_a.push_back(pa);
      to_b.push_back(pb);
      // zero-mass quotient fibers contribute zero weight
      if (sgn(nu_a.weights[v]) == 0)
        w.push_back(Rat(0));
      else
        w.push_back(mu_a.weights[pa] * mu_b.weights[pb] / nu_a.weights[v]);
    }
  c.space = make_space(a.id + "*" + b.id, std::move(labels));
  c.tau = make_measure(c.space, std::move(w));
  c.to_a = SpaceMap{c.space.id, a.id, std::move(to_a)};
  c.to_b = SpaceMap{c.space.id, b.id, std::move(to_b)};

  // both marginals must come back exactly
  Measure back_a = pushforward(c.space, a, c.to_a, c.tau);
  Measure back_b = pushforward(c.space, b, c.to_b, c.tau);
  require(back_a.weights == mu_a.weights && back_b.weights == mu_b.weights,
          Ec::InternalCheckFailed, "coupling lost a marginal");
  return c;
}

void validate_family_shape(const Diagram& d, const MarginalFamily& fam) {
  int n = d.poset.n();
  require(static_cast<int>(fam.components.size()) == n, Ec::InconsistentFamily,
          "family needs one component per index");
  for (int i = 0; i < n; ++i) {
    require(fam.components[i].space == d.space(i).id, Ec::SpaceMismatch,
            "component " + std::to_string(i) + " lives on '" +
                fam.components[i].space + "', expected '" + d.space(i).id + "'");
    make_measure(d.space(i), fam.components[i].weights);  // revalidate
  }
}

ConsistencyReport check_consistent_family(const Diagram& d, const MarginalFamily& fam) {
  validate_family_shape(d, fam);
  int n = d.poset.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !d.poset.is_geq(i, j)) continue;
      Measure pushed = pushforward(d.space(i), d.space(j), d.map_for(i, j),
                                   fam.components[i]);
      for (int p = 0; p < d.space(j).size(); ++p)
        if (pushed.weights[p] != fam.components[j].weights[p])
          return ConsistencyReport{false,
                                   FamilyViolation{i, j, d.space(j).points[p]}};
    }
  return ConsistencyReport{true, std::nullopt};
}

}  // namespace openchi
