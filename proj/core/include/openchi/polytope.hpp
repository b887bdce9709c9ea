#pragma once

#include "openchi/linalg.hpp"

namespace openchi {

// H-form polyhedron: { x : a.x <= b for each inequality, e.x = c for
// each equation }. Also serves as a plain linear system for the LP
// routines; boundedness is not assumed unless an operation requires it.
struct HPolytope {
  int dim = 0;
  std::vector<std::pair<RatVec, Rat>> ineqs;
  std::vector<std::pair<RatVec, Rat>> eqs;
};

// V-form polytope; every listed point is a vertex.
struct VPolytope {
  int dim = 0;
  std::vector<RatVec> vertices;
};

struct AffineMap {
  int source_dim = 0;
  int target_dim = 0;
  RatMat matrix;  // target_dim rows of source_dim
  RatVec offset;  // target_dim

  RatVec apply(const RatVec& x) const;
  RatVec apply_linear(const RatVec& d) const;  // matrix only
};

// Tangent cone at a point: { d : a.d <= 0 for tight rows, e.d = 0 }.
struct PolyhedralCone {
  int dim = 0;
  std::vector<RatVec> le_rows;
  RatMat eq_rows;
  std::vector<int> tight;  // indices of tight inequalities in the source polytope
};

// ---- exact linear programming -------------------------------------------

// Infeasibility certificate over the rows of an HPolytope:
//   ineq_mult >= 0, combined rows vanish, combined rhs < 0.
struct FarkasCertificate {
  RatVec ineq_mult;
  RatVec eq_mult;
};

bool point_satisfies(const HPolytope& h, const RatVec& x);
bool verify_farkas(const HPolytope& h, const FarkasCertificate& cert);

struct Feasibility {
  bool feasible = false;
  RatVec witness;            // when feasible
  FarkasCertificate farkas;  // when infeasible
};

// Decides feasibility; both answers carry re-verifiable evidence and are
// re-checked by substitution before returning.
Feasibility lp_feasible(const HPolytope& h);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  RatVec point;
  Rat value;
  FarkasCertificate farkas;
};

LpOutcome lp_optimize(const HPolytope& h, const RatVec& objective, bool maximize);

// ---- polyhedral computations --------------------------------------------

// Double description of { y : le.y <= 0, eq.y = 0 }: a lineality basis
// plus the extreme rays of the pointed remainder.
struct DDCone {
  std::vector<RatVec> lineality;
  std::vector<RatVec> rays;
};

DDCone dd_cone(int dim, const std::vector<RatVec>& le_rows, const RatMat& eq_rows);

// All vertices of a bounded H-polyhedron (empty input yields an empty
// list). Errors with UnboundedInput when a recession direction exists.
VPolytope vertex_enumeration(const HPolytope& h);

// Irredundant H-form of the convex hull: affine-hull equations plus one
// inequality per facet.
HPolytope hull(const VPolytope& v);

// Exact projection onto the listed coordinates (ascending), via
// Fourier-Motzkin with LP redundancy pruning.
HPolytope fm_project(const HPolytope& h, const std::vector<int>& keep);

// Drops inequalities implied by the rest, and dependent equations.
HPolytope prune_redundant(HPolytope h);

// Vertices of the image, irredundant.
VPolytope image_polytope(const AffineMap& f, const VPolytope& v);

PolyhedralCone tangent_cone(const HPolytope& h, const RatVec& point);

// Generators of a cone: lineality basis contributes both signs.
std::vector<RatVec> cone_generators(const PolyhedralCone& cone);

}  // namespace openchi
