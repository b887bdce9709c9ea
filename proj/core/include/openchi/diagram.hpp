#pragma once

#include <map>
#include <string>
#include <vector>

#include "openchi/poset.hpp"

namespace openchi {

struct FiniteSpace {
  std::string id;
  std::vector<std::string> points;

  int size() const { return static_cast<int>(points.size()); }
  int point_index(const std::string& label) const;
};

FiniteSpace make_space(std::string id, std::vector<std::string> points);

// Total map between finite spaces, stored by point index.
struct SpaceMap {
  std::string source;
  std::string target;
  std::vector<int> assignment;

  int operator()(int p) const { return assignment[p]; }
};

SpaceMap make_space_map(const FiniteSpace& src, const FiniteSpace& dst,
                        std::vector<int> assignment);

bool is_surjective(const SpaceMap& f, const FiniteSpace& dst);

// Poset-indexed diagram of finite spaces. Maps are stored for strict
// comparable pairs only; phi_ii is the identity and is never stored.
struct Diagram {
  Poset poset;
  std::vector<FiniteSpace> spaces;
  std::map<std::pair<int, int>, SpaceMap> maps;  // key (i, j) with i >= j, i != j

  const FiniteSpace& space(int i) const { return spaces[i]; }
  const SpaceMap& map_for(int i, int j) const;

  // phi_ij applied to a point index of X_i; identity when i == j.
  int apply(int i, int j, int p) const;
};

// Checks space/map coverage and functoriality. Composition coherence is
// verified on every chain i > j > k; longer chains follow by induction.
Diagram validate_diagram(Poset poset, std::vector<FiniteSpace> spaces,
                         std::map<std::pair<int, int>, SpaceMap> maps);

}  // namespace openchi
