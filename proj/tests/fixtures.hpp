#pragma once

#include <map>
#include <string>
#include <vector>

#include "openchi/diagram.hpp"

// Small diagrams reused across the test binaries.

namespace fixtures {

using namespace openchi;

inline std::vector<std::string> points(int n) {
  std::vector<std::string> ps;
  for (int i = 0; i < n; ++i) ps.push_back("p" + std::to_string(i));
  return ps;
}

// a, b >= c with X_a = X_b = {0, 1} collapsing onto a single point.
inline Diagram square() {
  Poset poset = validate_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  std::vector<FiniteSpace> spaces = {make_space("Xa", {"0", "1"}),
                                     make_space("Xb", {"0", "1"}),
                                     make_space("Xc", {"*"})};
  std::map<std::pair<int, int>, SpaceMap> maps;
  maps[{0, 2}] = make_space_map(spaces[0], spaces[2], {0, 0});
  maps[{1, 2}] = make_space_map(spaces[1], spaces[2], {0, 0});
  return validate_diagram(poset, spaces, maps);
}

// Same shape with arbitrary sizes; legs wrap points around X_c cyclically.
inline Diagram square_sized(int na, int nb, int nc) {
  Poset poset = validate_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  std::vector<FiniteSpace> spaces = {make_space("Xa", points(na)),
                                     make_space("Xb", points(nb)),
                                     make_space("Xc", points(nc))};
  std::vector<int> fa(na), fb(nb);
  for (int i = 0; i < na; ++i) fa[i] = i % nc;
  for (int i = 0; i < nb; ++i) fb[i] = i % nc;
  std::map<std::pair<int, int>, SpaceMap> maps;
  maps[{0, 2}] = make_space_map(spaces[0], spaces[2], fa);
  maps[{1, 2}] = make_space_map(spaces[1], spaces[2], fb);
  return validate_diagram(poset, spaces, maps);
}

// a, b >= c, d: both top spaces are bit pairs, the bottoms read one bit
// each. The limit forces the two pairs to agree outright.
inline Diagram diamond2() {
  Poset poset = validate_poset(
      {"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  FiniteSpace pair_space_a = make_space("Xa", {"00", "01", "10", "11"});
  FiniteSpace pair_space_b = make_space("Xb", {"00", "01", "10", "11"});
  FiniteSpace bit_c = make_space("Xc", {"0", "1"});
  FiniteSpace bit_d = make_space("Xd", {"0", "1"});
  std::vector<int> first = {0, 0, 1, 1};
  std::vector<int> second = {0, 1, 0, 1};
  std::map<std::pair<int, int>, SpaceMap> maps;
  maps[{0, 2}] = make_space_map(pair_space_a, bit_c, first);
  maps[{0, 3}] = make_space_map(pair_space_a, bit_d, second);
  maps[{1, 2}] = make_space_map(pair_space_b, bit_c, first);
  maps[{1, 3}] = make_space_map(pair_space_b, bit_d, second);
  return validate_diagram(poset, {pair_space_a, pair_space_b, bit_c, bit_d},
                          maps);
}

// Three edge spaces over three shared bits, each edge anti-correlated.
// Two colors cannot 2-color a triangle, so the limit is empty while
// every pairwise constraint is satisfiable.
inline Diagram odd_cycle() {
  Poset poset = validate_poset({"e01", "e02", "e12", "v0", "v1", "v2"},
                               {{"e01", "v0"},
                                {"e01", "v1"},
                                {"e02", "v0"},
                                {"e02", "v2"},
                                {"e12", "v1"},
                                {"e12", "v2"}});
  FiniteSpace anti = make_space("E", {"01", "10"});
  FiniteSpace bit = make_space("V", {"0", "1"});
  std::vector<FiniteSpace> spaces = {make_space("E01", {"01", "10"}),
                                     make_space("E02", {"01", "10"}),
                                     make_space("E12", {"01", "10"}),
                                     make_space("V0", {"0", "1"}),
                                     make_space("V1", {"0", "1"}),
                                     make_space("V2", {"0", "1"})};
  std::vector<int> first = {0, 1};
  std::vector<int> second = {1, 0};
  std::map<std::pair<int, int>, SpaceMap> maps;
  maps[{0, 3}] = make_space_map(spaces[0], spaces[3], first);
  maps[{0, 4}] = make_space_map(spaces[0], spaces[4], second);
  maps[{1, 3}] = make_space_map(spaces[1], spaces[3], first);
  maps[{1, 5}] = make_space_map(spaces[1], spaces[5], second);
  maps[{2, 4}] = make_space_map(spaces[2], spaces[4], first);
  maps[{2, 5}] = make_space_map(spaces[2], spaces[5], second);
  return validate_diagram(poset, spaces, maps);
}

// a >= b >= c with deterministic collapsing maps.
inline Diagram chain3() {
  Poset poset = validate_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  std::vector<FiniteSpace> spaces = {make_space("Xa", {"0", "1", "2"}),
                                     make_space("Xb", {"0", "1"}),
                                     make_space("Xc", {"*"})};
  std::map<std::pair<int, int>, SpaceMap> maps;
  maps[{0, 1}] = make_space_map(spaces[0], spaces[1], {0, 1, 1});
  maps[{0, 2}] = make_space_map(spaces[0], spaces[2], {0, 0, 0});
  maps[{1, 2}] = make_space_map(spaces[1], spaces[2], {0, 0});
  return validate_diagram(poset, spaces, maps);
}

}  // namespace fixtures
