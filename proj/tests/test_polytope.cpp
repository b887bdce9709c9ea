#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "openchi/error.hpp"
#include "openchi/generators.hpp"
#include "openchi/linalg.hpp"
#include "openchi/chi.hpp"
#include "openchi/polytope.hpp"

using namespace openchi;

namespace {

HPolytope cube(int dim) {
  HPolytope h;
  h.dim = dim;
  for (int i = 0; i < dim; ++i) {
    RatVec up(dim, Rat(0)), down(dim, Rat(0));
    up[i] = 1;
    down[i] = -1;
    h.ineqs.push_back({up, Rat(1)});
    h.ineqs.push_back({down, Rat(0)});
  }
  return h;
}

Rat rand_rat(Rng& rng) {
  Rat r(static_cast<long>(rng.below(7)) - 3, 1 + static_cast<long>(rng.below(2)));
  r.canonicalize();
  return r;
}

// Independent vertex oracle: solve every dim-subset of tight constraints
// and keep the feasible unique solutions.
std::vector<RatVec> brute_force_vertices(const HPolytope& h) {
  std::vector<std::pair<RatVec, Rat>> all = h.ineqs;
  for (const auto& e : h.eqs) all.push_back(e);
  int m = static_cast<int>(all.size());
  std::set<RatVec> found;

  std::vector<int> pick(h.dim);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == h.dim) {
      RatMat a;
      RatVec b;
      for (int idx = 0; idx < h.dim; ++idx) {
        a.push_back(all[pick[idx]].first);
        b.push_back(all[pick[idx]].second);
      }
      auto x = solve_linear(a, b);
      if (x && point_satisfies(h, *x)) found.insert(*x);
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[k] = i;
      rec(i + 1, k + 1);
    }
  };
  if (h.dim <= m) rec(0, 0);
  return {found.begin(), found.end()};
}

}  // namespace

TEST_CASE("double description of the nonnegative orthant") {
  RatMat le = {{Rat(-1), Rat(0), Rat(0)},
               {Rat(0), Rat(-1), Rat(0)},
               {Rat(0), Rat(0), Rat(-1)}};
  DDCone cone = dd_cone(3, le, {});
  CHECK(cone.lineality.empty());
  REQUIRE(cone.rays.size() == 3);
  for (const auto& r : cone.rays) {
    int nonzero = 0;
    for (const auto& x : r) {
      if (x != 0) {
        ++nonzero;
        CHECK(x == 1);
      }
    }
    CHECK(nonzero == 1);
  }
}

TEST_CASE("double description keeps lineality") {
  // single halfspace x <= 0 in the plane
  DDCone cone = dd_cone(2, {{Rat(1), Rat(0)}}, {});
  REQUIRE(cone.lineality.size() == 1);
  CHECK(cone.lineality[0][0] == 0);  // the free direction is the y axis
  REQUIRE(cone.rays.size() == 1);
  CHECK(cone.rays[0][0] == -1);
}

TEST_CASE("double description with equations") {
  // x + y + z = 0 intersected with z >= 0: a halfplane, so one lineality
  // direction plus a single ray modulo it
  DDCone cone = dd_cone(3, {{Rat(0), Rat(0), Rat(-1)}},
                        {{Rat(1), Rat(1), Rat(1)}});
  REQUIRE(cone.lineality.size() == 1);
  CHECK(cone.lineality[0][2] == 0);
  REQUIRE(cone.rays.size() == 1);
  CHECK(cone.rays[0][0] + cone.rays[0][1] + cone.rays[0][2] == 0);
  CHECK(cone.rays[0][2] > 0);
}

TEST_CASE("vertex enumeration of boxes and simplices") {
  VPolytope v3 = vertex_enumeration(cube(3));
  CHECK(v3.vertices.size() == 8);

  HPolytope simplex = simplex_polytope(4);
  VPolytope vs = vertex_enumeration(simplex);
  REQUIRE(vs.vertices.size() == 4);
  for (const auto& vert : vs.vertices) {
    Rat total = 0;
    for (const auto& x : vert) total += x;
    CHECK(total == 1);
  }
}

TEST_CASE("vertex enumeration of an empty polytope") {
  HPolytope h = cube(2);
  h.ineqs.push_back({{Rat(1), Rat(1)}, Rat(-1)});  // x + y <= -1
  VPolytope v = vertex_enumeration(h);
  CHECK(v.vertices.empty());
}

TEST_CASE("unbounded polyhedra are rejected") {
  HPolytope h;
  h.dim = 2;
  h.ineqs.push_back({{Rat(-1), Rat(0)}, Rat(0)});
  CHECK_THROWS_AS(vertex_enumeration(h), Error);
}

TEST_CASE("vertex enumeration matches the tight-subset oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    int dim = 1 + static_cast<int>(rng.below(3));
    HPolytope h = cube(dim);
    int extra = static_cast<int>(rng.below(4));
    for (int r = 0; r < extra; ++r) {
      RatVec a(dim);
      for (auto& x : a) x = rand_rat(rng);
      h.ineqs.push_back({std::move(a), rand_rat(rng)});
    }
    if (rng.below(3) == 0) {
      RatVec a(dim);
      for (auto& x : a) x = rand_rat(rng);
      h.eqs.push_back({std::move(a), Rat(0)});
    }

    std::vector<RatVec> expected = brute_force_vertices(h);
    VPolytope got = vertex_enumeration(h);
    std::vector<RatVec> sorted = got.vertices;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == expected);
  }
}

TEST_CASE("hull inverts vertex enumeration") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 1 + static_cast<int>(rng.below(4));
    int npts = 1 + static_cast<int>(rng.below(8));
    VPolytope v;
    v.dim = dim;
    for (int k = 0; k < npts; ++k) {
      RatVec p(dim);
      for (auto& x : p) x = rand_rat(rng);
      v.vertices.push_back(std::move(p));
    }

    HPolytope h = hull(v);
    VPolytope back = vertex_enumeration(h);

    // the recovered vertex set must be exactly the extreme points
    for (const auto& vert : back.vertices) CHECK(point_satisfies(h, vert));
    std::set<RatVec> input(v.vertices.begin(), v.vertices.end());
    for (const auto& vert : back.vertices) CHECK(input.count(vert) == 1);

    // and every input point must lie inside the hull
    for (const auto& p : v.vertices) CHECK(point_satisfies(h, p));

    // round trip again: same H-polytope feasible set
    HPolytope h2 = hull(back);
    VPolytope back2 = vertex_enumeration(h2);
    std::vector<RatVec> a = back.vertices, b = back2.vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("hull of a lower-dimensional point set") {
  VPolytope v;
  v.dim = 3;
  v.vertices = {{Rat(0), Rat(0), Rat(0)},
                {Rat(1), Rat(0), Rat(0)},
                {Rat(0), Rat(1), Rat(0)},
                {Rat(1), Rat(1), Rat(0)}};
  HPolytope h = hull(v);
  REQUIRE(h.eqs.size() == 1);  // the z = 0 plane
  CHECK(vertex_enumeration(h).vertices.size() == 4);
}

TEST_CASE("hull of a single point is an equation system") {
  VPolytope v;
  v.dim = 2;
  v.vertices = {{Rat(1, 3), Rat(2, 3)}};
  HPolytope h = hull(v);
  VPolytope back = vertex_enumeration(h);
  REQUIRE(back.vertices.size() == 1);
  CHECK(back.vertices[0] == v.vertices[0]);
}

TEST_CASE("empty hull round trips") {
  VPolytope v;
  v.dim = 2;
  HPolytope h = hull(v);
  CHECK_FALSE(lp_feasible(h).feasible);
  CHECK(vertex_enumeration(h).vertices.empty());
}

TEST_CASE("projection drops coordinates faithfully") {
  // shadow of the cube is the square
  HPolytope sq = fm_project(cube(3), {0, 1});
  CHECK(sq.dim == 2);
  VPolytope v = vertex_enumeration(sq);
  CHECK(v.vertices.size() == 4);

  // a diagonal slice projects onto a segment
  HPolytope slice = cube(2);
  slice.eqs.push_back({{Rat(1), Rat(1)}, Rat(1)});
  HPolytope seg = fm_project(slice, {0});
  VPolytope sv = vertex_enumeration(seg);
  REQUIRE(sv.vertices.size() == 2);
  CHECK(sv.vertices[0][0] == 0);
  CHECK(sv.vertices[1][0] == 1);
}

TEST_CASE("projection preserves emptiness") {
  HPolytope h = cube(2);
  h.ineqs.push_back({{Rat(1), Rat(1)}, Rat(-1)});
  HPolytope p = fm_project(h, {0});
  CHECK_FALSE(lp_feasible(p).feasible);
}

TEST_CASE("projection agrees with projected vertices") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 2 + static_cast<int>(rng.below(2));
    HPolytope h = cube(dim);
    int extra = static_cast<int>(rng.below(3));
    for (int r = 0; r < extra; ++r) {
      RatVec a(dim);
      for (auto& x : a) x = rand_rat(rng);
      h.ineqs.push_back({std::move(a), rand_rat(rng)});
    }
    std::vector<int> keep;
    for (int i = 0; i < dim; ++i)
      if (rng.below(2) == 0) keep.push_back(i);
    if (keep.empty()) keep.push_back(0);

    HPolytope shadow = fm_project(h, keep);

    VPolytope full = vertex_enumeration(h);
    VPolytope flat;
    flat.dim = static_cast<int>(keep.size());
    std::set<RatVec> seen;
    for (const auto& vert : full.vertices) {
      RatVec p;
      for (int c : keep) p.push_back(vert[c]);
      seen.insert(std::move(p));
    }
    flat.vertices = {seen.begin(), seen.end()};

    if (flat.vertices.empty()) {
      CHECK_FALSE(lp_feasible(shadow).feasible);
      continue;
    }
    HPolytope expected = hull(flat);
    VPolytope got = vertex_enumeration(shadow);
    std::vector<RatVec> a = got.vertices, b = vertex_enumeration(expected).vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("redundant rows are pruned without changing the set") {
  HPolytope h = cube(2);
  h.ineqs.push_back({{Rat(1), Rat(1)}, Rat(5)});   // slack everywhere
  h.ineqs.push_back({{Rat(1), Rat(0)}, Rat(1)});   // duplicate
  h.ineqs.push_back({{Rat(2), Rat(0)}, Rat(2)});   // scaled duplicate
  HPolytope pruned = prune_redundant(h);
  CHECK(pruned.ineqs.size() == 4);
  VPolytope a = vertex_enumeration(h);
  VPolytope b = vertex_enumeration(pruned);
  std::vector<RatVec> av = a.vertices, bv = b.vertices;
  std::sort(av.begin(), av.end());
  std::sort(bv.begin(), bv.end());
  CHECK(av == bv);
}

TEST_CASE("image of a polytope under an affine map") {
  VPolytope sq = vertex_enumeration(cube(2));
  AffineMap sum;
  sum.source_dim = 2;
  sum.target_dim = 1;
  sum.matrix = {{Rat(1), Rat(1)}};
  sum.offset = {Rat(0)};
  VPolytope img = image_polytope(sum, sq);
  REQUIRE(img.vertices.size() == 2);  // interior images pruned
  CHECK(img.vertices[0][0] == 0);
  CHECK(img.vertices[1][0] == 2);
}

TEST_CASE("tangent cone at a vertex and in the interior") {
  HPolytope h = cube(2);

  PolyhedralCone at_origin = tangent_cone(h, {Rat(0), Rat(0)});
  CHECK(at_origin.le_rows.size() == 2);  // the two lower bounds

  PolyhedralCone inside = tangent_cone(h, {Rat(1, 2), Rat(1, 2)});
  CHECK(inside.le_rows.empty());

  CHECK_THROWS_AS(tangent_cone(h, {Rat(2), Rat(0)}), Error);

  // generators of the vertex cone point into the box
  std::vector<RatVec> gens = cone_generators(at_origin);
  REQUIRE(gens.size() == 2);
  for (const auto& g : gens) {
    CHECK(g[0] >= 0);
    CHECK(g[1] >= 0);
  }
}

TEST_CASE("affine map application") {
  AffineMap f;
  f.source_dim = 2;
  f.target_dim = 2;
  f.matrix = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  f.offset = {Rat(1), Rat(0)};
  RatVec y = f.apply({Rat(2), Rat(3)});
  CHECK(y == RatVec{Rat(4), Rat(2)});
  RatVec lin = f.apply_linear({Rat(2), Rat(3)});
  CHECK(lin == RatVec{Rat(3), Rat(2)});
}
