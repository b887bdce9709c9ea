#pragma once

#include <optional>

#include "openchi/cone.hpp"
#include "openchi/measure.hpp"
#include "openchi/openness.hpp"
#include "openchi/polytope.hpp"

namespace openchi {

// The map sending a measure on the limit to its family of marginals,
// realized as one stacked 0/1 marginalization matrix. Domain: the simplex
// over limit elements. Codomain: the product of per-index simplices cut by
// the pushforward equation of every comparable pair.
struct ChiMap {
  Diagram diagram;
  LimitSpace limit;
  std::vector<int> block_offset;  // start of each index block in codomain coords
  int codomain_dim = 0;
  HPolytope domain;
  HPolytope codomain;
  AffineMap map;
};

ChiMap build_chi(const Diagram& d);

MarginalFamily chi_apply(const ChiMap& chi, const Measure& tau);

// Flatten a family into codomain coordinates and back.
RatVec family_vector(const ChiMap& chi, const MarginalFamily& fam);
MarginalFamily family_from_vector(const ChiMap& chi, const RatVec& v);

// Codomain restricted to the maximal indices; the other blocks are
// determined by pushforward, so this is the same polytope without the
// redundant coordinates.
HPolytope maximal_embedded_codomain(const ChiMap& chi);

struct SurjectivityReport {
  bool surjective = false;
  std::vector<RatVec> vertices;    // codomain vertices, enumeration order
  std::vector<RatVec> witnesses;   // preimage measure per covered vertex
  int unreached = -1;              // first vertex with empty preimage
  std::optional<FarkasCertificate> farkas;
};

// Vertex coverage decides hull coverage: the image is itself a polytope.
SurjectivityReport check_chi_surjective(const ChiMap& chi);

struct ChiOpennessReport {
  bool onto_codomain = false;  // openness is onto the image when this is false
  OpennessReport exact;
  HPolytope target;            // polytope the certifier ran against
  double sampled_modulus = 0;  // floating corroboration, radius 1e-3
};

ChiOpennessReport check_chi_open(const ChiMap& chi,
                                 const OpennessOptions& opt = {});

struct PreimageResult {
  std::optional<Measure> witness;  // chi_apply(witness) == family, re-verified
  std::optional<FarkasCertificate> farkas;
};

PreimageResult preimage_witness(const ChiMap& chi, const MarginalFamily& family);

// Exact matrix identity: marginalizing a measure on the apex simplex
// through the induced map into the limit agrees with marginalizing along
// the cone legs directly.
bool verify_composition_identity(const Cone& cone, const Diagram& d);

struct FunctorPreservationReport {
  bool preserved = false;
  bool induced_map_surjective = false;   // P of the characteristic map, onto
  OpennessReport induced_map_open;       // certified on the simplices
  SurjectivityReport chi_surjective;
  ChiOpennessReport chi_open;
};

// Requires the cone itself to be open-multicommutative (induced map onto
// the limit); throws ConeNotOpenMulticommutative otherwise.
FunctorPreservationReport check_functor_preserves(const Cone& cone, const Diagram& d);

// P(f) for a plain map of finite spaces, as an affine map between the
// standard simplices.
AffineMap pushforward_matrix(const FiniteSpace& src, const FiniteSpace& dst,
                             const SpaceMap& f);

// H-form of the standard simplex on n points.
HPolytope simplex_polytope(int n);

}  // namespace openchi
