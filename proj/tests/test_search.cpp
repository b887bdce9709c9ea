#include "doctest.h"

#include "openchi/search.hpp"

using namespace openchi;

TEST_CASE("search is reproducible for a fixed seed") {
  SearchBounds bounds;
  bounds.max_elements = 4;
  bounds.max_points = 3;
  bounds.seed = 77;
  bounds.count = 12;

  SearchResult a = run_search(bounds);
  SearchResult b = run_search(bounds);
  REQUIRE(a.rows.size() == 12);
  REQUIRE(b.rows.size() == 12);
  for (size_t k = 0; k < a.rows.size(); ++k) {
    CHECK(a.rows[k].cls == b.rows[k].cls);
    CHECK(a.rows[k].surjective == b.rows[k].surjective);
    CHECK(a.rows[k].open_verdict == b.rows[k].open_verdict);
    CHECK(a.rows[k].total_points == b.rows[k].total_points);
    CHECK(a.rows[k].diagram.poset.covers == b.rows[k].diagram.poset.covers);
  }
  CHECK(a.table == b.table);
}

TEST_CASE("different seeds explore different diagrams") {
  SearchBounds bounds;
  bounds.count = 8;
  bounds.seed = 1;
  SearchResult a = run_search(bounds);
  bounds.seed = 2;
  SearchResult b = run_search(bounds);
  bool same = true;
  for (size_t k = 0; k < a.rows.size(); ++k)
    same = same && a.rows[k].diagram.poset.covers == b.rows[k].diagram.poset.covers &&
           a.rows[k].total_points == b.rows[k].total_points;
  CHECK_FALSE(same);
}

TEST_CASE("a zero-instance sweep is empty but well formed") {
  SearchBounds bounds;
  bounds.count = 0;
  SearchResult r = run_search(bounds);
  CHECK(r.rows.empty());
  CHECK(r.table.empty());
  CHECK_FALSE(r.minimal_not_surjective.has_value());
}

TEST_CASE("every sweep verdict is internally consistent") {
  SearchBounds bounds;
  bounds.seed = 5;
  bounds.count = 25;
  SearchResult r = run_search(bounds);
  int counted = 0;
  for (const auto& [cls, verdicts] : r.table)
    for (const auto& [verdict, count] : verdicts) counted += count;
  CHECK(counted == 25);
  for (const auto& row : r.rows) {
    CHECK(row.total_points > 0);
    bool named_class = row.cls == DiagramClass::Chain ||
                       row.cls == DiagramClass::Forest ||
                       row.cls == DiagramClass::SingleQuotient ||
                       row.cls == DiagramClass::General;
    CHECK(named_class);
  }
}
