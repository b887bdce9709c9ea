#include "doctest.h"

#include "fixtures.hpp"
#include "openchi/error.hpp"
#include "openchi/generators.hpp"
#include "openchi/measure.hpp"

using namespace openchi;

TEST_CASE("measure validation") {
  FiniteSpace sp = make_space("X", {"a", "b", "c"});
  Measure mu = make_measure(sp, {Rat(1, 2), Rat(1, 3), Rat(1, 6)});
  CHECK(mu.weight(0) == Rat(1, 2));

  CHECK_THROWS_AS(make_measure(sp, {Rat(1, 2), Rat(1, 2), Rat(1, 2)}), Error);
  CHECK_THROWS_AS(make_measure(sp, {Rat(3, 2), Rat(-1, 2), Rat(0)}), Error);
  CHECK_THROWS_AS(make_measure(sp, {Rat(1)}), Error);
}

TEST_CASE("label round trip is sparse on zeros") {
  FiniteSpace sp = make_space("X", {"a", "b", "c"});
  Measure mu = measure_from_labels(sp, {{"a", Rat(2, 3)}, {"c", Rat(1, 3)}});
  CHECK(mu.weight(1) == 0);
  auto labels = measure_to_labels(sp, mu);
  CHECK(labels.size() == 2);
  CHECK(labels.at("a") == Rat(2, 3));
  CHECK(labels.count("b") == 0);
  CHECK(equal_measures(mu, measure_from_labels(sp, labels)));
}

TEST_CASE("pushforward sums fibers") {
  FiniteSpace src = make_space("X", {"0", "1", "2"});
  FiniteSpace dst = make_space("Y", {"even", "odd"});
  SpaceMap f = make_space_map(src, dst, {0, 1, 0});
  Measure mu = make_measure(src, {Rat(1, 2), Rat(1, 3), Rat(1, 6)});
  Measure nu = pushforward(src, dst, f, mu);
  CHECK(nu.weight(0) == Rat(2, 3));
  CHECK(nu.weight(1) == Rat(1, 3));

  // pushforward along a composite equals composed pushforwards
  FiniteSpace one = make_space("Z", {"*"});
  SpaceMap g = make_space_map(dst, one, {0, 0});
  SpaceMap gf = make_space_map(src, one, {0, 0, 0});
  CHECK(equal_measures(pushforward(src, one, gf, mu),
                       pushforward(dst, one, g, nu)));
}

TEST_CASE("point mass and products") {
  FiniteSpace x = make_space("X", {"0", "1"});
  FiniteSpace y = make_space("Y", {"a", "b", "c"});
  Measure dx = point_mass(x, 1);
  CHECK(dx.weight(0) == 0);
  CHECK(dx.weight(1) == 1);

  Measure my = make_measure(y, {Rat(1, 2), Rat(1, 4), Rat(1, 4)});
  SpacedMeasure prod = product_measure(x, dx, y, my);
  CHECK(prod.space.size() == 6);
  Rat total = 0;
  for (const auto& w : prod.measure.weights) total += w;
  CHECK(total == 1);
  // mass concentrates on the x = 1 slice
  CHECK(prod.measure.weight(prod.space.point_index("(1,a)")) == Rat(1, 2));
  CHECK(prod.measure.weight(prod.space.point_index("(0,a)")) == 0);
}

TEST_CASE("graph pushforward rides the function graph") {
  FiniteSpace x = make_space("X", {"0", "1", "2"});
  FiniteSpace y = make_space("Y", {"lo", "hi"});
  SpaceMap f = make_space_map(x, y, {0, 0, 1});
  Measure mu = make_measure(x, {Rat(1, 4), Rat(1, 4), Rat(1, 2)});
  SpacedMeasure graph = graph_pushforward(x, y, f, mu);
  CHECK(graph.measure.weight(graph.space.point_index("(0,lo)")) == Rat(1, 4));
  CHECK(graph.measure.weight(graph.space.point_index("(2,hi)")) == Rat(1, 2));
  CHECK(graph.measure.weight(graph.space.point_index("(0,hi)")) == 0);
}

TEST_CASE("gluing coupling has the required marginals") {
  FiniteSpace a = make_space("A", {"a0", "a1", "a2"});
  FiniteSpace b = make_space("B", {"b0", "b1"});
  FiniteSpace s = make_space("S", {"s0", "s1"});
  SpaceMap qa = make_space_map(a, s, {0, 0, 1});
  SpaceMap qb = make_space_map(b, s, {0, 1});
  Measure mu_a = make_measure(a, {Rat(1, 4), Rat(1, 4), Rat(1, 2)});
  Measure mu_b = make_measure(b, {Rat(1, 2), Rat(1, 2)});

  Coupling c = gluing_coupling(a, mu_a, b, mu_b, s, qa, qb);
  Measure back_a = pushforward(c.space, a, c.to_a, c.tau);
  Measure back_b = pushforward(c.space, b, c.to_b, c.tau);
  CHECK(equal_measures(back_a, mu_a));
  CHECK(equal_measures(back_b, mu_b));
  // support stays inside the fiber product
  for (size_t k = 0; k < c.pairs.size(); ++k)
    CHECK(qa(c.pairs[k].first) == qb(c.pairs[k].second));

  SUBCASE("mismatched quotient marginals are rejected") {
    Measure skew = make_measure(b, {Rat(1, 4), Rat(3, 4)});
    CHECK_THROWS_AS(gluing_coupling(a, mu_a, b, skew, s, qa, qb), Error);
  }
}

TEST_CASE("coupling over a zero-mass quotient point") {
  FiniteSpace a = make_space("A", {"a0", "a1"});
  FiniteSpace b = make_space("B", {"b0", "b1"});
  FiniteSpace s = make_space("S", {"s0", "s1"});
  SpaceMap qa = make_space_map(a, s, {0, 1});
  SpaceMap qb = make_space_map(b, s, {0, 1});
  Measure mu_a = make_measure(a, {Rat(1), Rat(0)});
  Measure mu_b = make_measure(b, {Rat(1), Rat(0)});
  Coupling c = gluing_coupling(a, mu_a, b, mu_b, s, qa, qb);
  CHECK(equal_measures(pushforward(c.space, a, c.to_a, c.tau), mu_a));
  CHECK(equal_measures(pushforward(c.space, b, c.to_b, c.tau), mu_b));
}

TEST_CASE("family consistency on the square") {
  Diagram d = fixtures::square();
  MarginalFamily fam;
  fam.components = {make_measure(d.space(0), {Rat(1, 2), Rat(1, 2)}),
                    make_measure(d.space(1), {Rat(5, 6), Rat(1, 6)}),
                    make_measure(d.space(2), {Rat(1)})};
  ConsistencyReport rep = check_consistent_family(d, fam);
  CHECK(rep.consistent);

  SUBCASE("a broken normalization is a shape error") {
    CHECK_THROWS_AS(validate_family_shape(
                        d, MarginalFamily{{fam.components[0],
                                           fam.components[1]}}),
                    Error);
  }
}

TEST_CASE("inconsistent family names the violated pair") {
  Diagram d = fixtures::chain3();
  MarginalFamily fam;
  fam.components = {
      make_measure(d.space(0), {Rat(1, 3), Rat(1, 3), Rat(1, 3)}),
      make_measure(d.space(1), {Rat(1, 2), Rat(1, 2)}),  // true marginal is 1/3, 2/3
      make_measure(d.space(2), {Rat(1)})};
  ConsistencyReport rep = check_consistent_family(d, fam);
  REQUIRE_FALSE(rep.consistent);
  REQUIRE(rep.violation.has_value());
  CHECK(rep.violation->upper == 0);
  CHECK(rep.violation->lower == 1);
  CHECK(rep.violation->point == "0");
}

TEST_CASE("random measures are genuine probability measures") {
  Rng rng(11);
  GeneratorBounds bounds;
  for (int trial = 0; trial < 40; ++trial) {
    Diagram d = random_diagram(rng, bounds);
    for (int i = 0; i < d.poset.n(); ++i) {
      Measure mu = random_measure(d.space(i), rng);
      Rat total = 0;
      for (const auto& w : mu.weights) {
        CHECK(w >= 0);
        total += w;
      }
      CHECK(total == 1);
    }
  }
}
