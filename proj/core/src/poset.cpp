#include "openchi/poset.hpp"

#include <set>

#include "openchi/error.hpp"

namespace openchi {

int Poset::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (elements[i] == label) return i;
  return -1;
}

std::vector<int> Poset::strictly_below(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n(); ++j)
    if (j != i && is_geq(i, j)) out.push_back(j);
  return out;
}

Poset validate_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& covers) {
  Poset p;
  p.elements = elements;
  std::set<std::string> seen;
  for (const auto& e : elements)
    require(seen.insert(e).second, Ec::DuplicateLabel, "poset element '" + e + "'");

  int n = p.n();
  p.geq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) p.geq[i][i] = 1;

  for (const auto& [hi, lo] : covers) {
    int i = p.index_of(hi);
    int j = p.index_of(lo);
    require(i >= 0, Ec::UnknownElement, "cover mentions '" + hi + "'");
    require(j >= 0, Ec::UnknownElement, "cover mentions '" + lo + "'");
    p.covers.emplace_back(i, j);
    p.geq[i][j] = 1;
  }

  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.geq[i][k])
        for (int j = 0; j < n; ++j)
          if (p.geq[k][j]) p.geq[i][j] = 1;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      require(!(p.geq[i][j] && p.geq[j][i]), Ec::CycleDetected,
              "'" + elements[i] + "' and '" + elements[j] + "' areordered both ways");

  for (int i = 0; i < n; ++i) {
    bool is_max = true;
    for (int j = 0; j < n && is_max; ++j)
      if (j != i && p.geq[j][i]) is_max = false;
    if (is_max) p.maximal.push_back(i);
  }
  return p;
}

}  // namespace openchi
