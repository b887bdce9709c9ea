#pragma once

#include <map>
#include <optional>
#include <string>

#include "openchi/generators.hpp"

namespace openchi {

// Deterministic sweep over random diagrams: classify, decide surjectivity
// of the marginalization map, certify openness. Face-budget blowups are
// recorded, not fatal.
struct SearchBounds {
  int max_elements = 4;
  int max_points = 3;
  std::uint64_t seed = 1;
  int count = 50;
  // Sweep budget is deliberately small: large face lattices are recorded
  // as FACE_BUDGET rows instead of stalling the whole sweep.
  int face_budget = 400;
};

struct SearchRow {
  DiagramClass cls = DiagramClass::General;
  bool surjective = false;
  std::string open_verdict;  // OPEN, NOT_OPEN, or FACE_BUDGET
  int total_points = 0;
  Diagram diagram;
};

struct SearchResult {
  std::vector<SearchRow> rows;
  // class name -> verdict summary -> count
  std::map<std::string, std::map<std::string, int>> table;
  std::optional<Diagram> minimal_not_surjective;  // fewest total points
  int minimal_points = 0;
};

SearchResult run_search(const SearchBounds& bounds);

}  // namespace openchi
