#include "openchi/cone.hpp"

#include "openchi/error.hpp"

namespace openchi {

Cone make_cone(const Diagram& d, FiniteSpace apex,
               std::vector<std::vector<int>> legs) {
  int n = d.poset.n();
  require(static_cast<int>(legs.size()) == n, Ec::UnknownIndex,
          "need one leg per index");
  for (int i = 0; i < n; ++i) {
    require(legs[i].size() == apex.points.size(), Ec::UnknownPoint,
            "leg to '" + d.space(i).id + "' is not total on the apex");
    for (int v : legs[i])
      require(v >= 0 && v < d.space(i).size(), Ec::UnknownPoint,
              "leg to '" + d.space(i).id + "' leaves the space");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !d.poset.is_geq(i, j)) continue;
      for (int t = 0; t < apex.size(); ++t)
        require(d.apply(i, j, legs[i][t]) == legs[j][t], Ec::LegIncoherent,
                "legs disagree through " + d.poset.elements[i] + ">" +
                    d.poset.elements[j] + " at apex point '" + apex.points[t] + "'");
    }
  return Cone{std::move(apex), std::move(legs)};
}

SpaceMap cone_characteristic_map(const Diagram& d, const LimitSpace& lim,
                                 const Cone& cone) {
  int n = d.poset.n();
  std::vector<int> assignment(cone.apex.size());
  for (int t = 0; t < cone.apex.size(); ++t) {
    std::vector<int> tuple(n);
    for (int i = 0; i < n; ++i) tuple[i] = cone.legs[i][t];
    int e = lim.element_index(tuple);
    require(e >= 0, Ec::InternalCheckFailed,
            "coherent legs must land in the limit");
    assignment[t] = e;
  }
  return SpaceMap{cone.apex.id, "lim", std::move(assignment)};
}

ConeVerdict check_cone_open_multicommutative(const Diagram& d,
                                             const LimitSpace& lim,
                                             const Cone& cone) {
  SpaceMap chi = cone_characteristic_map(d, lim, cone);
  std::vector<char> hit(lim.size(), 0);
  for (int e : chi.assignment) hit[e] = 1;
  ConeVerdict v;
  v.surjective = true;
  for (int e = 0; e < lim.size(); ++e)
    if (!hit[e]) {
      v.surjective = false;
      v.missed_element = limit_element_label(d, lim.elements[e]);
      break;
    }
  // openness of a map of finite discrete spaces is automatic
  v.open_multicommutative = v.surjective;
  return v;
}

PullbackData pullback_square(const CommutativeSquare& sq) {
  for (int x = 0; x < sq.x.size(); ++x)
    require(sq.p.assignment[sq.f.assignment[x]] == sq.q.assignment[sq.g.assignment[x]],
            Ec::SquareNotCommutative,
            "square does not commute at '" + sq.x.points[x] + "'");

  PullbackData out;
  std::vector<std::string> labels;
  std::vector<int> to_y, to_z;
  for (int y = 0; y < sq.y.size(); ++y)
    for (int z = 0; z < sq.z.size(); ++z)
      if (sq.p.assignment[y] == sq.q.assignment[z]) {
        out.pairs.emplace_back(y, z);
        labels.push_back("(" + sq.y.points[y] + "," + sq.z.points[z] + ")");
        to_y.push_back(y);
        to_z.push_back(z);
      }
  out.pullback = make_space(sq.y.id + "*" + sq.z.id, std::move(labels));
  out.proj_y = SpaceMap{out.pullback.id, sq.y.id, std::move(to_y)};
  out.proj_z = SpaceMap{out.pullback.id, sq.z.id, std::move(to_z)};
  return out;
}

BicommutativeVerdict check_bicommutative(const CommutativeSquare& sq) {
  PullbackData pb = pullback_square(sq);
  std::vector<char> hit(pb.pairs.size(), 0);
  for (int x = 0; x < sq.x.size(); ++x) {
    std::pair<int, int> img{sq.f.assignment[x], sq.g.assignment[x]};
    for (size_t w = 0; w < pb.pairs.size(); ++w)
      if (pb.pairs[w] == img) { hit[w] = 1; break; }
  }
  BicommutativeVerdict v;
  v.bicommutative = true;
  for (size_t w = 0; w < pb.pairs.size(); ++w)
    if (!hit[w]) {
      v.bicommutative = false;
      v.missed_pair = pb.pullback.points[w];
      break;
    }
  return v;
}

}  // namespace openchi
