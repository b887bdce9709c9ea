#pragma once

#include <map>
#include <optional>

#include "openchi/diagram.hpp"
#include "openchi/rational.hpp"

namespace openchi {

// Probability measure with exact rational weights. Stored dense and
// aligned with the canonical point order of its space; a weight of zero
// is the same thing as an absent point.
struct Measure {
  std::string space;
  RatVec weights;

  const Rat& weight(int p) const { return weights[p]; }
};

// Validates nonnegativity and exact total mass 1.
Measure make_measure(const FiniteSpace& sp, RatVec weights);

// Sparse label form, absent labels mean weight zero.
Measure measure_from_labels(const FiniteSpace& sp,
                            const std::map<std::string, Rat>& weights);
std::map<std::string, Rat> measure_to_labels(const FiniteSpace& sp, const Measure& mu);

Measure point_mass(const FiniteSpace& sp, int p);

bool equal_measures(const Measure& a, const Measure& b);

// nu(y) = sum of mu over the fiber of y.
Measure pushforward(const FiniteSpace& src, const FiniteSpace& dst,
                    const SpaceMap& f, const Measure& mu);

struct SpacedMeasure {
  FiniteSpace space;
  Measure measure;
};

FiniteSpace product_space(const FiniteSpace& x, const FiniteSpace& y);

SpacedMeasure product_measure(const FiniteSpace& x, const Measure& mx,
                              const FiniteSpace& y, const Measure& my);

// Measure on X x Y concentrated on the graph of f, weights copied from mu.
SpacedMeasure graph_pushforward(const FiniteSpace& x, const FiniteSpace& y,
                                const SpaceMap& f, const Measure& mu);

// Coupling of mu_a and mu_b over a shared quotient S: conditional
// independence given the quotient value. Fibers over zero-mass quotient
// points carry weight zero. Requires equal pushforwards onto S.
struct Coupling {
  FiniteSpace space;  // fiber product, pair labels
  std::vector<std::pair<int, int>> pairs;
  Measure tau;
  SpaceMap to_a, to_b;
};

Coupling gluing_coupling(const FiniteSpace& a, const Measure& mu_a,
                         const FiniteSpace& b, const Measure& mu_b,
                         const FiniteSpace& s, const SpaceMap& qa,
                         const SpaceMap& qb);

// One measure per diagram index, in poset element order.
struct MarginalFamily {
  std::vector<Measure> components;
};

struct FamilyViolation {
  int upper = -1;
  int lower = -1;
  std::string point;  // point of X_lower where the pushforward differs
};

struct ConsistencyReport {
  bool consistent = false;
  std::optional<FamilyViolation> violation;
};

// Membership test for the compatible-family set: every pushforward
// equation must hold exactly. Reports the first violated pair.
ConsistencyReport check_consistent_family(const Diagram& d, const MarginalFamily& fam);

// Shape validation only (one component per index, right spaces, each a
// probability measure). Throws on failure.
void validate_family_shape(const Diagram& d, const MarginalFamily& fam);

}  // namespace openchi
