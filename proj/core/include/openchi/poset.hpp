#pragma once

#include <string>
#include <utility>
#include <vector>

namespace openchi {

// Finite poset over labeled index elements. The stored relation is the
// reflexive-transitive closure of the user-supplied generating pairs.
// Element order and the order of maximal elements follow the input list.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> covers;  // (upper, lower) as element indices
  std::vector<std::vector<char>> geq;       // geq[i][j] != 0 iff i >= j
  std::vector<int> maximal;

  int n() const { return static_cast<int>(elements.size()); }
  bool is_geq(int i, int j) const { return geq[i][j] != 0; }
  int index_of(const std::string& label) const;

  // Indices strictly below i, ascending.
  std::vector<int> strictly_below(int i) const;
};

// Checks labels, closes the relation, rejects cycles (antisymmetry).
Poset validate_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& covers);

}  // namespace openchi
