#include <benchmark/benchmark.h>

#include "openchi/chi.hpp"
#include "openchi/generators.hpp"
#include "openchi/glue.hpp"
#include "openchi/polytope.hpp"

using namespace openchi;

namespace {

Diagram square_diagram(int na, int nb, int nc) {
  auto points = [](int n) {
    std::vector<std::string> ps;
    for (int i = 0; i < n; ++i) ps.push_back("p" + std::to_string(i));
    return ps;
  };
  Poset poset = validate_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  std::vector<FiniteSpace> spaces = {make_space("Xa", points(na)),
                                     make_space("Xb", points(nb)),
                                     make_space("Xc", points(nc))};
  std::map<std::pair<int, int>, SpaceMap> maps;
  std::vector<int> fa(na), fb(nb);
  for (int i = 0; i < na; ++i) fa[i] = i % nc;
  for (int i = 0; i < nb; ++i) fb[i] = i % nc;
  maps[{0, 2}] = make_space_map(spaces[0], spaces[2], fa);
  maps[{1, 2}] = make_space_map(spaces[1], spaces[2], fb);
  return validate_diagram(poset, spaces, maps);
}

void bm_lp_feasible(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HPolytope h = simplex_polytope(n);
  for (int i = 0; i < n; ++i) {
    RatVec row(n, Rat(0));
    row[i] = 1;
    Rat cap(2, n);
    cap.canonicalize();
    h.ineqs.push_back({std::move(row), cap});
  }
  for (auto s : state) {
    Feasibility f = lp_feasible(h);
    benchmark::DoNotOptimize(f.feasible);
  }
}
BENCHMARK(bm_lp_feasible)->Arg(4)->Arg(8)->Arg(16);

void bm_vertex_enumeration(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HPolytope cube;
  cube.dim = n;
  for (int i = 0; i < n; ++i) {
    RatVec lo(n, Rat(0)), hi(n, Rat(0));
    lo[i] = -1;
    hi[i] = 1;
    cube.ineqs.push_back({std::move(lo), Rat(0)});
    cube.ineqs.push_back({std::move(hi), Rat(1)});
  }
  for (auto s : state) {
    VPolytope v = vertex_enumeration(cube);
    benchmark::DoNotOptimize(v.vertices.size());
  }
}
BENCHMARK(bm_vertex_enumeration)->Arg(3)->Arg(5)->Arg(7);

void bm_compute_limit(benchmark::State& state) {
  Diagram d = square_diagram(4, 4, 2);
  for (auto s : state) {
    LimitSpace lim = compute_limit(d);
    benchmark::DoNotOptimize(lim.size());
  }
}
BENCHMARK(bm_compute_limit);

void bm_glue_family(benchmark::State& state) {
  Diagram d = square_diagram(3, 3, 2);
  ChiMap chi = build_chi(d);
  Rng rng(7);
  Measure tau = random_measure(limit_as_space(d, chi.limit), rng);
  MarginalFamily family = chi_apply(chi, tau);
  for (auto s : state) {
    GlueResult g = glue_family(d, family);
    benchmark::DoNotOptimize(g.method);
  }
}
BENCHMARK(bm_glue_family);

void bm_chi_openness(benchmark::State& state) {
  Diagram d = square_diagram(3, 3, 2);
  ChiMap chi = build_chi(d);
  for (auto s : state) {
    OpennessReport rep = affine_map_is_open(chi.map, chi.domain, chi.codomain);
    benchmark::DoNotOptimize(rep.open);
  }
}
BENCHMARK(bm_chi_openness);

}  // namespace

BENCHMARK_MAIN();
