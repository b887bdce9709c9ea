#pragma once

#include <optional>

#include "openchi/chi.hpp"
#include "openchi/measure.hpp"

namespace openchi {

// Non-maximal indices grouped under maximal ones: block l holds the
// indices below the l-th maximal index that no earlier block claimed.
struct GammaPartition {
  std::vector<int> maximal_order;
  std::vector<std::vector<int>> blocks;
};

GammaPartition gamma_partition(const Poset& poset);

// Predicts whether the constructive gluing order is guaranteed to work.
// SingleQuotient: walking the maximal indices in canonical order, every
// new maximal index shares constraints with the already-placed indices
// through a single greatest shared index (possibly none).
enum class DiagramClass { Chain, Forest, SingleQuotient, General };

const char* diagram_class_name(DiagramClass c);

DiagramClass classify_diagram(const Poset& poset);

enum class GlueMethod { Constructive, Lp, Infeasible };

const char* glue_method_name(GlueMethod m);

struct GlueResult {
  GlueMethod method = GlueMethod::Infeasible;
  std::optional<Measure> tau;              // on the limit space
  std::optional<FarkasCertificate> farkas; // over the preimage system rows
};

// Builds a joint measure with the given marginals when one exists.
// Chain/forest/single-quotient posets go through the constructive
// coupling path; anything else (or any constructive surprise) falls back
// to the LP oracle, so an answer is never wrong, only sometimes tagged Lp.
GlueResult glue_family(const Diagram& d, const MarginalFamily& family);

// Componentwise maps between two diagrams over the same poset, commuting
// with both families of connecting maps.
struct DiagramMorphism {
  Diagram source;
  Diagram target;
  std::vector<SpaceMap> components;
};

DiagramMorphism make_diagram_morphism(Diagram source, Diagram target,
                                      std::vector<SpaceMap> components);

// The induced map on limits: apply each component coordinatewise.
SpaceMap induced_limit_map(const DiagramMorphism& m, const LimitSpace& src_lim,
                           const LimitSpace& dst_lim);

struct LiftResult {
  std::optional<Measure> witness;  // chi(witness) = family and the induced
                                   // pushforward of witness equals tau0
  std::optional<FarkasCertificate> farkas;
};

// Solves the lifting problem: find tau on lim(source) whose marginals are
// the family and whose pushforward along the induced limit map is tau0.
// Requires chi over the target of tau0 to equal the componentwise
// pushforward of the family (PreconditionMismatch otherwise).
LiftResult lift_diagram_morphism(const DiagramMorphism& m, const Measure& tau0,
                                 const MarginalFamily& family);

}  // namespace openchi
