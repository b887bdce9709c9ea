#include "openchi/search.hpp"

#include "openchi/error.hpp"

namespace openchi {

SearchResult run_search(const SearchBounds& bounds) {
  require(bounds.max_elements >= 1 && bounds.max_points >= 1,
          Ec::DimensionMismatch, "search bounds must be at least 1");

  SearchResult result;
  Rng rng(bounds.seed);
  GeneratorBounds gen;
  gen.max_elements = bounds.max_elements;
  gen.max_points = bounds.max_points;

  for (int i = 0; i < bounds.count; ++i) {
    SearchRow row;
    row.diagram = random_diagram(rng, gen);
    row.cls = classify_diagram(row.diagram.poset);
    for (const auto& sp : row.diagram.spaces) row.total_points += sp.size();

    ChiMap chi = build_chi(row.diagram);
    row.surjective = check_chi_surjective(chi).surjective;
    try {
      OpennessOptions opt;
      opt.face_budget = bounds.face_budget;
      ChiOpennessReport open = check_chi_open(chi, opt);
      row.open_verdict = open.exact.open ? "OPEN" : "NOT_OPEN";
    } catch (const Error& e) {
      if (e.code() != Ec::FaceBudgetExceeded) throw;
      row.open_verdict = "FACE_BUDGET";
    }

    std::string verdict =
        (row.surjective ? std::string("SURJECTIVE") : std::string("NOT_SURJECTIVE")) +
        "/" + row.open_verdict;
    result.table[diagram_class_name(row.cls)][verdict] += 1;

    if (!row.surjective &&
        (!result.minimal_not_surjective || row.total_points < result.minimal_points)) {
      result.minimal_not_surjective = row.diagram;
      result.minimal_points = row.total_points;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace openchi
