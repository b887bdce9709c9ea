#include "openchi/glue.hpp"

#include <algorithm>
#include <map>

#include "openchi/error.hpp"

namespace openchi {

GammaPartition gamma_partition(const Poset& poset) {
  GammaPartition g;
  g.maximal_order = poset.maximal;
  std::vector<char> is_max(poset.n(), 0), claimed(poset.n(), 0);
  for (int m : poset.maximal) is_max[m] = 1;
  for (int m : poset.maximal) {
    std::vector<int> block;
    for (int j = 0; j < poset.n(); ++j) {
      if (is_max[j] || claimed[j] || !poset.is_geq(m, j)) continue;
      claimed[j] = 1;
      block.push_back(j);
    }
    g.blocks.push_back(std::move(block));
  }
  return g;
}

const char* diagram_class_name(DiagramClass c) {
  switch (c) {
    case DiagramClass::Chain: return "CHAIN";
    case DiagramClass::Forest: return "FOREST";
    case DiagramClass::SingleQuotient: return "SINGLE_QUOTIENT";
    case DiagramClass::General: return "GENERAL";
  }
  return "GENERAL";
}

const char* glue_method_name(GlueMethod m) {
  switch (m) {
    case GlueMethod::Constructive: return "CONSTRUCTIVE";
    case GlueMethod::Lp: return "LP";
    case GlueMethod::Infeasible: return "INFEASIBLE";
  }
  return "INFEASIBLE";
}

namespace {

// Greatest element of a nonempty subset, or -1 when incomparable.
int greatest_of(const Poset& poset, const std::vector<int>& subset) {
  for (int g : subset) {
    bool dominates = true;
    for (int s : subset)
      if (!poset.is_geq(g, s)) { dominates = false; break; }
    if (dominates) return g;
  }
  return -1;
}

// Shared lower indices between a new maximal index and everything placed
// before it in the gluing order.
std::vector<int> shared_with_placed(const Poset& poset, const GammaPartition& g,
                                    size_t upto_block, int m) {
  std::vector<char> placed(poset.n(), 0);
  for (size_t l = 0; l < upto_block; ++l) {
    placed[g.maximal_order[l]] = 1;
    for (int j : g.blocks[l]) placed[j] = 1;
  }
  std::vector<int> shared;
  for (int j = 0; j < poset.n(); ++j)
    if (placed[j] && j != m && poset.is_geq(m, j)) shared.push_back(j);
  return shared;
}

}  // namespace

DiagramClass classify_diagram(const Poset& poset) {
  bool chain = true;
  for (int i = 0; i < poset.n() && chain; ++i)
    for (int j = 0; j < poset.n(); ++j)
      if (!poset.is_geq(i, j) && !poset.is_geq(j, i)) { chain = false; break; }
  if (chain) return DiagramClass::Chain;

  std::vector<char> is_max(poset.n(), 0);
  for (int m : poset.maximal) is_max[m] = 1;
  bool forest = true;
  for (int j = 0; j < poset.n() && forest; ++j) {
    if (is_max[j]) continue;
    int above = 0;
    for (int m : poset.maximal)
      if (poset.is_geq(m, j)) ++above;
    if (above != 1) forest = false;
  }
  if (forest) return DiagramClass::Forest;

  GammaPartition g = gamma_partition(poset);
  for (size_t l = 1; l < g.maximal_order.size(); ++l) {
    std::vector<int> shared = shared_with_placed(poset, g, l, g.maximal_order[l]);
    if (!shared.empty() && greatest_of(poset, shared) < 0)
      return DiagramClass::General;
  }
  return DiagramClass::SingleQuotient;
}

namespace {

// Partial joint measures live on tuples over the indices placed so far,
// keyed in placement order.
using PartialMeasure = std::map<std::vector<int>, Rat>;

struct ConstructiveState {
  std::vector<int> placement;           // index per placed position
  std::vector<int> position_of;        // index -> position or -1
  PartialMeasure mass;

  void mark(int idx) {
    position_of[idx] = static_cast<int>(placement.size());
    placement.push_back(idx);
  }
};

std::optional<Measure> constructive_glue(const ChiMap& chi,
                                         const MarginalFamily& family) {
  const Diagram& d = chi.diagram;
  const Poset& poset = d.poset;
  GammaPartition g = gamma_partition(poset);

  ConstructiveState st;
  st.position_of.assign(poset.n(), -1);

  for (size_t l = 0; l < g.maximal_order.size(); ++l) {
    int m = g.maximal_order[l];

    if (l == 0) {
      st.mark(m);
      for (int p = 0; p < d.space(m).size(); ++p) {
        const Rat& w = family.components[m].weights[p];
        if (sgn(w) != 0) st.mass[{p}] = w;
      }
    } else {
      std::vector<int> shared = shared_with_placed(poset, g, l, m);
      PartialMeasure grown;
      if (shared.empty()) {
        // independent block: product attach
        for (const auto& [tuple, w] : st.mass)
          for (int p = 0; p < d.space(m).size(); ++p) {
            const Rat& wp = family.components[m].weights[p];
            if (sgn(wp) == 0) continue;
            std::vector<int> t = tuple;
            t.push_back(p);
            grown[std::move(t)] = w * wp;
          }
      } else {
        int quotient = greatest_of(poset, shared);
        if (quotient < 0) return std::nullopt;
        // conditional independence over the shared quotient value
        const Measure& nu = family.components[quotient];
        const SpaceMap& to_q = d.map_for(m, quotient);
        int qpos = st.position_of[quotient];
        for (const auto& [tuple, w] : st.mass) {
          int s = tuple[qpos];
          if (sgn(nu.weights[s]) == 0) continue;
          for (int p = 0; p < d.space(m).size(); ++p) {
            if (to_q(p) != s) continue;
            const Rat& wp = family.components[m].weights[p];
            if (sgn(wp) == 0) continue;
            std::vector<int> t = tuple;
            t.push_back(p);
            grown[std::move(t)] = w * wp / nu.weights[s];
          }
        }
      }
      st.mark(m);
      st.mass = std::move(grown);
    }

    // deterministic coordinates of this block
    for (int j : g.blocks[l]) {
      int mpos = st.position_of[m];
      PartialMeasure grown;
      for (const auto& [tuple, w] : st.mass) {
        std::vector<int> t = tuple;
        t.push_back(d.apply(m, j, tuple[mpos]));
        grown[std::move(t)] = w;
      }
      st.mark(j);
      st.mass = std::move(grown);
    }
  }

  // reassemble tuples in index order and place them on the limit
  RatVec weights(chi.limit.size(), Rat(0));
  for (const auto& [tuple, w] : st.mass) {
    std::vector<int> by_index(poset.n());
    for (int i = 0; i < poset.n(); ++i) by_index[i] = tuple[st.position_of[i]];
    int e = chi.limit.element_index(by_index);
    if (e < 0) return std::nullopt;  // support escaped the limit
    weights[e] += w;
  }

  Measure tau = make_measure(limit_as_space(d, chi.limit), std::move(weights));

  // the whole point: marginals must come back exactly
  MarginalFamily check = chi_apply(chi, tau);
  for (size_t i = 0; i < family.components.size(); ++i)
    if (!equal_measures(check.components[i], family.components[i]))
      return std::nullopt;
  return tau;
}

}  // namespace

GlueResult glue_family(const Diagram& d, const MarginalFamily& family) {
  ChiMap chi = build_chi(d);
  ConsistencyReport consistency = check_consistent_family(d, family);
  if (!consistency.consistent) {
    const FamilyViolation& v = *consistency.violation;
    fail(Ec::InconsistentFamily,
         "pushforward of component " + d.poset.elements[v.upper] +
             " disagrees with component " + d.poset.elements[v.lower] +
             " at point " + v.point);
  }

  GlueResult result;
  if (classify_diagram(d.poset) != DiagramClass::General) {
    std::optional<Measure> tau = constructive_glue(chi, family);
    if (tau) {
      result.method = GlueMethod::Constructive;
      result.tau = std::move(tau);
      return result;
    }
  }

  PreimageResult lp = preimage_witness(chi, family);
  if (lp.witness) {
    result.method = GlueMethod::Lp;
    result.tau = std::move(lp.witness);
  } else {
    result.method = GlueMethod::Infeasible;
    result.farkas = std::move(lp.farkas);
  }
  return result;
}

DiagramMorphism make_diagram_morphism(Diagram source, Diagram target,
                                      std::vector<SpaceMap> components) {
  require(source.poset.elements == target.poset.elements &&
              source.poset.geq == target.poset.geq,
          Ec::SpaceMismatch, "morphism endpoints live over different posets");
  require(components.size() == source.spaces.size(), Ec::SpaceMismatch,
          "one component map per index required");

  const int k = source.poset.n();
  for (int i = 0; i < k; ++i) {
    require(components[i].source == source.space(i).id &&
                components[i].target == target.space(i).id,
            Ec::SpaceMismatch,
            "component at " + source.poset.elements[i] + " has wrong endpoints");
    require(components[i].assignment.size() ==
                static_cast<size_t>(source.space(i).size()),
            Ec::SpaceMismatch,
            "component at " + source.poset.elements[i] + " is not total");
  }

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !source.poset.is_geq(i, j)) continue;
      const SpaceMap& phi = source.map_for(i, j);
      const SpaceMap& phi_t = target.map_for(i, j);
      for (int x = 0; x < source.space(i).size(); ++x)
        require(phi_t(components[i](x)) == components[j](phi(x)),
                Ec::NaturalityViolation,
                "square " + source.poset.elements[i] + " >= " +
                    source.poset.elements[j] + " fails at point " +
                    source.space(i).points[x]);
    }

  DiagramMorphism m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.components = std::move(components);
  return m;
}

SpaceMap induced_limit_map(const DiagramMorphism& m, const LimitSpace& src_lim,
                           const LimitSpace& dst_lim) {
  std::vector<int> assignment;
  for (const auto& tuple : src_lim.elements) {
    std::vector<int> image(tuple.size());
    for (size_t i = 0; i < tuple.size(); ++i)
      image[i] = m.components[i](tuple[i]);
    int e = dst_lim.element_index(image);
    require(e >= 0, Ec::InternalCheckFailed,
            "naturality should map limit tuples to limit tuples");
    assignment.push_back(e);
  }
  SpaceMap f;
  f.source = "lim";
  f.target = "lim";
  f.assignment = std::move(assignment);
  return f;
}

LiftResult lift_diagram_morphism(const DiagramMorphism& m, const Measure& tau0,
                                 const MarginalFamily& family) {
  ChiMap chi = build_chi(m.source);
  ChiMap chi_t = build_chi(m.target);

  require(tau0.space == "lim" && static_cast<int>(tau0.weights.size()) ==
                                     chi_t.limit.size(),
          Ec::SpaceMismatch, "tau0 is not a measure on the target limit");
  validate_family_shape(m.source, family);

  // compatibility: marginals of tau0 must be the pushforwards of the family
  MarginalFamily target_family = chi_apply(chi_t, tau0);
  for (int i = 0; i < m.source.poset.n(); ++i) {
    Measure pushed = pushforward(m.source.space(i), m.target.space(i),
                                 m.components[i], family.components[i]);
    require(equal_measures(pushed, target_family.components[i]),
            Ec::PreconditionMismatch,
            "pushforward of the family disagrees with tau0 at index " +
                m.source.poset.elements[i]);
  }

  SpaceMap induced = induced_limit_map(m, chi.limit, chi_t.limit);

  HPolytope sys = chi.domain;
  RatVec target = family_vector(chi, family);
  for (int c = 0; c < chi.map.target_dim; ++c)
    sys.eqs.push_back({chi.map.matrix[c], target[c]});
  for (int e2 = 0; e2 < chi_t.limit.size(); ++e2) {
    RatVec row(chi.limit.size(), Rat(0));
    for (int e = 0; e < chi.limit.size(); ++e)
      if (induced(e) == e2) row[e] = 1;
    sys.eqs.push_back({std::move(row), tau0.weights[e2]});
  }

  LiftResult result;
  Feasibility fs = lp_feasible(sys);
  if (!fs.feasible) {
    result.farkas = std::move(fs.farkas);
    return result;
  }

  Measure tau = make_measure(limit_as_space(m.source, chi.limit),
                             std::move(fs.witness));
  MarginalFamily back = chi_apply(chi, tau);
  for (size_t i = 0; i < family.components.size(); ++i)
    require(equal_measures(back.components[i], family.components[i]),
            Ec::InternalCheckFailed, "lift witness fails the marginal equations");
  FiniteSpace src_space = limit_as_space(m.source, chi.limit);
  FiniteSpace dst_space = limit_as_space(m.target, chi_t.limit);
  SpaceMap renamed = induced;
  renamed.source = src_space.id;
  renamed.target = dst_space.id;
  Measure pushed = pushforward(src_space, dst_space, renamed, tau);
  require(equal_measures(pushed, tau0), Ec::InternalCheckFailed,
          "lift witness fails the pushforward equation");
  result.witness = std::move(tau);
  return result;
}

}  // namespace openchi
