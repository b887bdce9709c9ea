#include "doctest.h"

#include "fixtures.hpp"
#include "openchi/error.hpp"
#include "openchi/generators.hpp"
#include "openchi/json_io.hpp"

using namespace openchi;
using nlohmann::json;

TEST_CASE("diagram documents round trip") {
  Rng rng(37);
  GeneratorBounds bounds;
  for (int trial = 0; trial < 40; ++trial) {
    Diagram d = random_diagram(rng, bounds);
    json doc = diagram_to_json(d);
    Diagram back = diagram_from_json(doc);
    CHECK(diagram_to_json(back) == doc);
    CHECK(back.poset.elements == d.poset.elements);
    CHECK(back.maps.size() == d.maps.size());
    for (const auto& [key, f] : d.maps)
      CHECK(back.maps.at(key).assignment == f.assignment);
  }
}

TEST_CASE("serialization is canonical") {
  Diagram d = fixtures::square();
  std::string a = diagram_to_json(d).dump();
  std::string b = diagram_to_json(diagram_from_json(diagram_to_json(d))).dump();
  CHECK(a == b);
}

TEST_CASE("family and measure documents round trip") {
  Diagram d = fixtures::chain3();
  MarginalFamily fam;
  fam.components = {
      make_measure(d.space(0), {Rat(1, 2), Rat(1, 3), Rat(1, 6)}),
      make_measure(d.space(1), {Rat(1, 2), Rat(1, 2)}),
      make_measure(d.space(2), {Rat(1)})};
  json doc = family_to_json(d, fam);
  MarginalFamily back = family_from_json(d, doc);
  for (int i = 0; i < d.poset.n(); ++i)
    CHECK(equal_measures(back.components[i], fam.components[i]));
  CHECK(family_to_json(d, back) == doc);

  // fractions travel as strings in lowest terms
  CHECK(doc["components"]["a"]["0"] == "1/2");
  CHECK(doc["components"]["c"]["*"] == "1");
}

TEST_CASE("malformed documents raise parse errors") {
  auto expect_parse_error = [](const json& doc) {
    try {
      diagram_from_json(doc);
    } catch (const Error& e) {
      return e.code() == Ec::ParseError;
    }
    return false;
  };
  CHECK(expect_parse_error(json::array()));
  CHECK(expect_parse_error(json{{"elements", 3}}));
  CHECK(expect_parse_error(json{{"elements", {"a"}}, {"covers", "zz"}}));

  // semantically wrong but well-shaped input keeps its domain code
  json doc = diagram_to_json(fixtures::square());
  doc["maps"].erase("b->c");
  bool missing = false;
  try {
    diagram_from_json(doc);
  } catch (const Error& e) {
    missing = e.code() == Ec::MissingMap;
  }
  CHECK(missing);
}

TEST_CASE("unknown points in measures are domain errors") {
  Diagram d = fixtures::square();
  json doc = {{"components",
               {{"a", {{"0", "1/2"}, {"zz", "1/2"}}},
                {"b", {{"0", "1"}}},
                {"c", {{"*", "1"}}}}}};
  bool flagged = false;
  try {
    family_from_json(d, doc);
  } catch (const Error& e) {
    flagged = e.code() == Ec::UnknownPoint;
  }
  CHECK(flagged);
}

TEST_CASE("morphism components round trip") {
  Diagram d = fixtures::square();
  Rng rng(41);
  DiagramMorphism m = random_quotient_morphism(d, rng);
  json doc = morphism_to_json(m);
  std::vector<SpaceMap> comps =
      morphism_components_from_json(d, m.target, doc);
  for (int i = 0; i < d.poset.n(); ++i)
    CHECK(comps[i].assignment == m.components[i].assignment);
}

TEST_CASE("farkas certificates round trip") {
  FarkasCertificate cert;
  cert.ineq_mult = {Rat(0), Rat(2, 3)};
  cert.eq_mult = {Rat(-1, 2)};
  json doc = farkas_to_json(cert);
  FarkasCertificate back = farkas_from_json(doc);
  CHECK(back.ineq_mult == cert.ineq_mult);
  CHECK(back.eq_mult == cert.eq_mult);
}

TEST_CASE("fraction strings reject junk") {
  CHECK(rat_parse("2/3") == Rat(2, 3));
  CHECK(rat_parse("-7") == -7);
  CHECK(rat_str(Rat(2, 3)) == "2/3");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK_THROWS_AS(rat_parse("2/0"), Error);
  CHECK_THROWS_AS(rat_parse("abc"), Error);
  CHECK_THROWS_AS(rat_parse(""), Error);
  CHECK_THROWS_AS(rat_parse("1.5"), Error);
}

TEST_CASE("file digests are stable") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") != fnv1a64("b"));
}
