#include "openchi/diagram.hpp"

#include <set>

#include "openchi/error.hpp"

namespace openchi {

int FiniteSpace::point_index(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (points[i] == label) return i;
  return -1;
}

FiniteSpace make_space(std::string id, std::vector<std::string> points) {
  std::set<std::string> seen;
  for (const auto& p : points)
    require(seen.insert(p).second, Ec::DuplicateLabel,
            "point '" + p + "' in space '" + id + "'");
  return FiniteSpace{std::move(id), std::move(points)};
}

SpaceMap make_space_map(const FiniteSpace& src, const FiniteSpace& dst,
                        std::vector<int> assignment) {
  require(assignment.size() == src.points.size(), Ec::UnknownPoint,
          "map " + src.id + "->" + dst.id + " must assign every source point");
  for (int v : assignment)
    require(v >= 0 && v < dst.size(), Ec::UnknownPoint,
            "map " + src.id + "->" + dst.id + " hits a point outside the target");
  return SpaceMap{src.id, dst.id, std::move(assignment)};
}

bool is_surjective(const SpaceMap& f, const FiniteSpace& dst) {
  std::vector<char> hit(dst.size(), 0);
  for (int v : f.assignment) hit[v] = 1;
  for (char h : hit)
    if (!h) return false;
  return true;
}

const SpaceMap& Diagram::map_for(int i, int j) const {
  auto it = maps.find({i, j});
  require(it != maps.end(), Ec::MissingMap,
          "no map " + poset.elements[i] + "->" + poset.elements[j]);
  return it->second;
}

int Diagram::apply(int i, int j, int p) const {
  if (i == j) return p;
  return map_for(i, j).assignment[p];
}

Diagram validate_diagram(Poset poset, std::vector<FiniteSpace> spaces,
                         std::map<std::pair<int, int>, SpaceMap> maps) {
  int n = poset.n();
  require(static_cast<int>(spaces.size()) == n, Ec::UnknownIndex,
          "need exactly one space per poset element");

  for (const auto& [key, f] : maps) {
    auto [i, j] = key;
    require(i >= 0 && i < n && j >= 0 && j < n && i != j && poset.is_geq(i, j),
            Ec::UnexpectedMap,
            "map keyed by a pair that is not strictly comparable");
    require(f.source == spaces[i].id && f.target == spaces[j].id, Ec::SpaceMismatch,
            "map for (" + poset.elements[i] + "," + poset.elements[j] +
                ") does not connect the right spaces");
    require(f.assignment.size() == spaces[i].points.size(), Ec::UnknownPoint,
            "map " + f.source + "->" + f.target + " is not total");
    for (int v : f.assignment)
      require(v >= 0 && v < spaces[j].size(), Ec::UnknownPoint,
              "map " + f.source + "->" + f.target + " leaves the target");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && poset.is_geq(i, j))
        require(maps.count({i, j}) > 0, Ec::MissingMap,
                "missing map " + poset.elements[i] + "->" + poset.elements[j]);

  Diagram d{std::move(poset), std::move(spaces), std::move(maps)};

  // functoriality on length-2 chains
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !d.poset.is_geq(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j || !d.poset.is_geq(j, k)) continue;
        for (int p = 0; p < d.space(i).size(); ++p) {
          int via = d.apply(j, k, d.apply(i, j, p));
          int direct = d.apply(i, k, p);
          require(via == direct, Ec::CoherenceViolation,
                  "maps disagree along " + d.poset.elements[i] + ">" +
                      d.poset.elements[j] + ">" + d.poset.elements[k] +
                      " at point '" + d.space(i).points[p] + "'");
        }
      }
    }
  return d;
}

}  // namespace openchi
