#include "doctest.h"

#include "openchi/generators.hpp"
#include "openchi/polytope.hpp"

using namespace openchi;

namespace {

HPolytope box(int dim, const Rat& lo, const Rat& hi) {
  HPolytope h;
  h.dim = dim;
  for (int i = 0; i < dim; ++i) {
    RatVec up(dim, Rat(0)), down(dim, Rat(0));
    up[i] = 1;
    down[i] = -1;
    h.ineqs.push_back({up, hi});
    h.ineqs.push_back({down, -lo});
  }
  return h;
}

Rat random_small_rat(Rng& rng) {
  long num = static_cast<long>(rng.below(9)) - 4;
  long den = 1 + static_cast<long>(rng.below(3));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("feasibility with witness") {
  HPolytope h = box(2, Rat(0), Rat(1));
  h.eqs.push_back({{Rat(1), Rat(1)}, Rat(3, 2)});
  Feasibility f = lp_feasible(h);
  REQUIRE(f.feasible);
  CHECK(point_satisfies(h, f.witness));
}

TEST_CASE("infeasibility produces a checkable certificate") {
  HPolytope h = box(1, Rat(0), Rat(1));
  h.eqs.push_back({{Rat(1)}, Rat(2)});  // x = 2 outside the box
  Feasibility f = lp_feasible(h);
  REQUIRE_FALSE(f.feasible);
  CHECK(verify_farkas(h, f.farkas));
}

TEST_CASE("empty equality system") {
  HPolytope h;
  h.dim = 2;
  h.eqs.push_back({{Rat(1), Rat(0)}, Rat(1)});
  h.eqs.push_back({{Rat(1), Rat(0)}, Rat(2)});  // x = 1 and x = 2
  Feasibility f = lp_feasible(h);
  REQUIRE_FALSE(f.feasible);
  CHECK(verify_farkas(h, f.farkas));
}

TEST_CASE("optimization over the unit square") {
  HPolytope h = box(2, Rat(0), Rat(1));
  LpOutcome out = lp_optimize(h, {Rat(1), Rat(1)}, true);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == 2);
  CHECK(out.point == RatVec{Rat(1), Rat(1)});

  LpOutcome lo = lp_optimize(h, {Rat(1), Rat(1)}, false);
  CHECK(lo.value == 0);

  LpOutcome skew = lp_optimize(h, {Rat(2), Rat(-3)}, true);
  CHECK(skew.value == 2);
  CHECK(skew.point == RatVec{Rat(1), Rat(0)});
}

TEST_CASE("unbounded objective is detected") {
  HPolytope h;
  h.dim = 2;
  h.ineqs.push_back({{Rat(-1), Rat(0)}, Rat(0)});  // x >= 0
  h.ineqs.push_back({{Rat(0), Rat(-1)}, Rat(0)});  // y >= 0
  LpOutcome out = lp_optimize(h, {Rat(1), Rat(1)}, true);
  CHECK(out.status == LpStatus::Unbounded);
  // the same objective minimized is fine
  LpOutcome down = lp_optimize(h, {Rat(1), Rat(1)}, false);
  CHECK(down.status == LpStatus::Optimal);
  CHECK(down.value == 0);
}

TEST_CASE("infeasible optimization carries the certificate") {
  HPolytope h = box(1, Rat(0), Rat(1));
  h.ineqs.push_back({{Rat(-1)}, Rat(-2)});  // x >= 2
  LpOutcome out = lp_optimize(h, {Rat(1)}, true);
  REQUIRE(out.status == LpStatus::Infeasible);
  CHECK(verify_farkas(h, out.farkas));
}

TEST_CASE("degenerate vertices do not cycle") {
  // many hyperplanes through one point
  HPolytope h;
  h.dim = 3;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      RatVec row(3, Rat(0));
      row[i] = 1;
      row[j] = 1;
      h.ineqs.push_back({row, Rat(0)});
    }
  for (int i = 0; i < 3; ++i) {
    RatVec row(3, Rat(0));
    row[i] = -1;
    h.ineqs.push_back({row, Rat(1)});
  }
  LpOutcome out = lp_optimize(h, {Rat(1), Rat(1), Rat(1)}, true);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == 0);
}

TEST_CASE("random systems: every answer is self-verifying") {
  Rng rng(2024);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int dim = 1 + static_cast<int>(rng.below(4));
    HPolytope h;
    h.dim = dim;
    int rows = 1 + static_cast<int>(rng.below(6));
    for (int r = 0; r < rows; ++r) {
      RatVec a(dim);
      for (auto& x : a) x = random_small_rat(rng);
      Rat b = random_small_rat(rng);
      if (rng.below(4) == 0)
        h.eqs.push_back({std::move(a), b});
      else
        h.ineqs.push_back({std::move(a), b});
    }
    Feasibility f = lp_feasible(h);
    if (f.feasible) {
      ++feasible_seen;
      CHECK(point_satisfies(h, f.witness));
    } else {
      ++infeasible_seen;
      CHECK(verify_farkas(h, f.farkas));
    }
  }
  // the corpus must exercise both branches
  CHECK(feasible_seen > 10);
  CHECK(infeasible_seen > 10);
}

TEST_CASE("random bounded optimization agrees with vertex enumeration") {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int dim = 1 + static_cast<int>(rng.below(3));
    HPolytope h = box(dim, Rat(-1), Rat(1));
    int extra = static_cast<int>(rng.below(4));
    for (int r = 0; r < extra; ++r) {
      RatVec a(dim);
      for (auto& x : a) x = random_small_rat(rng);
      h.ineqs.push_back({std::move(a), random_small_rat(rng) + 1});
    }
    RatVec c(dim);
    for (auto& x : c) x = random_small_rat(rng);

    LpOutcome out = lp_optimize(h, c, true);
    VPolytope v = vertex_enumeration(h);
    if (v.vertices.empty()) {
      CHECK(out.status == LpStatus::Infeasible);
      continue;
    }
    REQUIRE(out.status == LpStatus::Optimal);
    Rat best = dot(c, v.vertices[0]);
    for (const auto& vert : v.vertices) best = std::max(best, dot(c, vert));
    CHECK(out.value == best);
  }
}
