#pragma once

#include "openchi/glue.hpp"
#include "openchi/rng.hpp"

namespace openchi {

// Random instance generation for tests and the search harness. Diagrams
// come from a world-partition model: each index observes a partition of a
// common set of worlds, finer partitions sit higher in the poset, and the
// connecting maps are block containment. Every diagram built this way is
// coherent and has a nonempty limit. Shadow worlds visible only below a
// chosen index produce points that upper maps miss, so legs need not be
// surjective.
struct GeneratorBounds {
  int max_elements = 4;
  int max_points = 3;
  double shadow_rate = 0.35;
};

Diagram random_diagram(Rng& rng, const GeneratorBounds& bounds);

// Integer weights 0..8, normalized.
Measure random_measure(const FiniteSpace& sp, Rng& rng);

// Legs picked by sending each apex point to a random limit element; every
// cone arises this way.
Cone random_cone(const Diagram& d, const LimitSpace& lim, Rng& rng,
                 int apex_size);

// Quotient of every space by a random congruence (point partitions closed
// under the connecting maps), with the projections as components.
DiagramMorphism random_quotient_morphism(const Diagram& d, Rng& rng);

}  // namespace openchi
