#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "openchi/polytope.hpp"

namespace openchi {

// ---- exact open-map certificate -------------------------------------------
//
// An affine map f restricted to a polytope P is open onto Q = f(P) exactly
// when, for every nonempty face of P with relative-interior point x, the
// linear part of f maps tangent_cone(P, x) onto a superset of
// tangent_cone(Q, f(x)). Each face record stores the generators of the
// target cone together with matching preimage directions.

struct FaceCertificate {
  std::vector<int> tight;           // inequality rows of P tight on the face
  RatVec point;                     // relative-interior point
  std::vector<RatVec> directions;   // generators of the codomain tangent cone
  std::vector<RatVec> preimages;    // feasible source directions, one per generator
};

struct OpennessCounterexample {
  std::vector<int> tight;
  RatVec point;
  RatVec direction;                 // target direction with no feasible preimage
  FarkasCertificate farkas;
};

struct OpennessReport {
  bool open = false;
  int faces_checked = 0;
  std::vector<FaceCertificate> certificates;
  std::optional<OpennessCounterexample> counterexample;
};

struct OpennessOptions {
  int face_budget = 10000;
};

// Throws NotSurjectiveOntoQ when f(P) != Q and FaceBudgetExceeded when the
// face lattice of P outgrows the budget.
OpennessReport affine_map_is_open(const AffineMap& f, const HPolytope& p,
                                  const HPolytope& q,
                                  const OpennessOptions& opt = {});

// ---- sampled corroboration -------------------------------------------------
//
// Floating-point estimate of the openness modulus: the largest c such that,
// around sampled points x, the image of the radius-r sup-norm ball covers the
// part of Q within c*r of f(x). Statistical tool only; never used as proof.

struct SampleOptions {
  int directions = 8;
  double c_hi = 2.0;
  std::uint64_t seed = 1;
};

double sampled_metric_openness(const AffineMap& f, const HPolytope& p,
                               const HPolytope& q, int sample_count,
                               double radius, const SampleOptions& opt = {});

}  // namespace openchi
