#include "openchi/limit.hpp"

#include <algorithm>

#include "openchi/error.hpp"

namespace openchi {

int LimitSpace::element_index(const std::vector<int>& tuple) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), tuple);
  if (it == elements.end() || *it != tuple) return -1;
  return static_cast<int>(it - elements.begin());
}

LimitSpace compute_limit(const Diagram& d) {
  const Poset& po = d.poset;
  int n = po.n();
  LimitSpace lim;
  lim.maximal = po.maximal;

  // Every index sits below some maximal index, so a compatible tuple is
  // determined by its maximal coordinates. Enumerate those, derive the
  // rest, then keep tuples satisfying every equation.
  std::vector<int> owner(n, -1);
  for (int j = 0; j < n; ++j)
    for (int m : po.maximal)
      if (po.is_geq(m, j)) { owner[j] = m; break; }

  int k = static_cast<int>(po.maximal.size());
  std::vector<int> cursor(k, 0);
  if (n == 0) return lim;
  for (int i = 0; i < n; ++i)
    if (d.space(i).size() == 0) return lim;  // no compatible tuples at all

  bool done = false;
  while (!done) {
    std::vector<int> tuple(n, -1);
    for (int t = 0; t < k; ++t) tuple[po.maximal[t]] = cursor[t];
    for (int j = 0; j < n; ++j)
      if (tuple[j] < 0) tuple[j] = d.apply(owner[j], j, tuple[owner[j]]);

    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (i != j && po.is_geq(i, j) && d.apply(i, j, tuple[i]) != tuple[j]) ok = false;
    if (ok) lim.elements.push_back(std::move(tuple));

    done = true;
    for (int t = k - 1; t >= 0; --t) {
      if (++cursor[t] < d.space(po.maximal[t]).size()) { done = false; break; }
      cursor[t] = 0;
    }
    if (k == 0) break;  // empty maximal set only when n == 0
  }

  std::sort(lim.elements.begin(), lim.elements.end());
  return lim;
}

std::string limit_element_label(const Diagram& d, const std::vector<int>& tuple) {
  std::string s = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += d.space(static_cast<int>(i)).points[tuple[i]];
  }
  return s + ")";
}

FiniteSpace limit_as_space(const Diagram& d, const LimitSpace& lim) {
  std::vector<std::string> labels;
  labels.reserve(lim.elements.size());
  for (const auto& t : lim.elements) labels.push_back(limit_element_label(d, t));
  return make_space("lim", std::move(labels));
}

LimitEmbedding limit_embedding(const LimitSpace& lim) {
  LimitEmbedding h;
  h.maximal = lim.maximal;
  for (int e = 0; e < lim.size(); ++e) {
    std::vector<int> coords;
    coords.reserve(h.maximal.size());
    for (int m : h.maximal) coords.push_back(lim.elements[e][m]);
    require(h.preimage_of.emplace(coords, e).second, Ec::InternalCheckFailed,
            "limit embedding is not injective");
    h.image.push_back(std::move(coords));
  }
  return h;
}

SpaceMap limit_projection(const Diagram& d, const LimitSpace& lim, int i) {
  require(i >= 0 && i < d.poset.n(), Ec::UnknownIndex, "projection index out of range");
  std::vector<int> assignment;
  assignment.reserve(lim.elements.size());
  for (const auto& t : lim.elements) assignment.push_back(t[i]);
  return SpaceMap{"lim", d.space(i).id, std::move(assignment)};
}

}  // namespace openchi
