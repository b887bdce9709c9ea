#include "openchi/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "openchi/error.hpp"

namespace openchi {

namespace {

// partition of the visible worlds at one index: world id -> block id
struct Partition {
  std::map<int, int> block_of;
  int nblocks = 0;
};

std::vector<std::vector<int>> blocks_of(const Partition& part) {
  std::vector<std::vector<int>> blocks(part.nblocks);
  for (const auto& [w, b] : part.block_of) blocks[b].push_back(w);
  return blocks;
}

// renumber blocks by smallest member world, keeping point order stable
void canonicalize(Partition& part) {
  std::vector<std::vector<int>> blocks = blocks_of(part);
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  part.block_of.clear();
  part.nblocks = static_cast<int>(blocks.size());
  for (int b = 0; b < part.nblocks; ++b)
    for (int w : blocks[b]) part.block_of[w] = b;
}

}  // namespace

Diagram random_diagram(Rng& rng, const GeneratorBounds& bounds) {
  require(bounds.max_elements >= 1 && bounds.max_points >= 1,
          Ec::DimensionMismatch, "generator bounds must be at least 1");

  const int n = 1 + static_cast<int>(rng.below(bounds.max_elements));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);

  // relations only point from higher to lower integer index, so the
  // input order is already a linear extension
  std::vector<std::pair<std::string, std::string>> cover_labels;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (rng.unit() < 0.45) cover_labels.push_back({labels[i], labels[j]});
  Poset poset = validate_poset(labels, cover_labels);

  const int worlds = 1 + static_cast<int>(rng.below(bounds.max_points));
  std::vector<Partition> parts(n);

  for (int i = 0; i < n; ++i) {
    // common refinement of everything below: worlds collide iff they share
    // a block in every lower partition
    std::map<std::vector<int>, std::vector<int>> classes;
    for (int w = 0; w < worlds; ++w) {
      std::vector<int> key;
      for (int j = 0; j < i; ++j)
        if (poset.is_geq(i, j)) key.push_back(parts[j].block_of.at(w));
      classes[std::move(key)].push_back(w);
    }
    std::vector<std::vector<int>> blocks;
    for (auto& [key, ws] : classes) blocks.push_back(std::move(ws));

    int cap = std::min(worlds, bounds.max_points);
    int lo = static_cast<int>(blocks.size());
    int target = lo >= cap ? lo : lo + static_cast<int>(rng.below(cap - lo + 1));
    while (static_cast<int>(blocks.size()) < target) {
      std::vector<int> splittable;
      for (size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b].size() >= 2) splittable.push_back(static_cast<int>(b));
      if (splittable.empty()) break;
      int b = splittable[rng.below(splittable.size())];
      std::vector<int> left, right;
      for (int w : blocks[b])
        (rng.unit() < 0.5 ? left : right).push_back(w);
      if (left.empty()) left.push_back(right.back()), right.pop_back();
      if (right.empty()) right.push_back(left.back()), left.pop_back();
      blocks[b] = std::move(left);
      blocks.push_back(std::move(right));
    }

    Partition& part = parts[i];
    part.nblocks = static_cast<int>(blocks.size());
    for (int b = 0; b < part.nblocks; ++b)
      for (int w : blocks[b]) part.block_of[w] = b;
    canonicalize(part);
  }

  // shadow worlds: visible only at one index and everything below it,
  // always as singleton blocks, so upper maps miss the new point
  int next_world = worlds;
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (rng.unit() >= bounds.shadow_rate) continue;
    int birth = static_cast<int>(rng.below(n));
    bool room = true;
    for (int k = 0; k < n && room; ++k)
      if (poset.is_geq(birth, k) && parts[k].nblocks >= bounds.max_points)
        room = false;
    if (!room) continue;
    int w = next_world++;
    for (int k = 0; k < n; ++k) {
      if (!poset.is_geq(birth, k)) continue;
      parts[k].block_of[w] = parts[k].nblocks++;
      canonicalize(parts[k]);
    }
  }

  std::vector<FiniteSpace> spaces;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> points(parts[i].nblocks);
    for (int b = 0; b < parts[i].nblocks; ++b)
      points[b] = "p" + std::to_string(b);
    spaces.push_back(make_space("X" + std::to_string(i), std::move(points)));
  }

  std::map<std::pair<int, int>, SpaceMap> maps;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !poset.is_geq(i, j)) continue;
      std::vector<std::vector<int>> blocks = blocks_of(parts[i]);
      std::vector<int> assignment(parts[i].nblocks);
      for (int b = 0; b < parts[i].nblocks; ++b)
        assignment[b] = parts[j].block_of.at(blocks[b].front());
      maps.emplace(std::make_pair(i, j),
                   make_space_map(spaces[i], spaces[j], std::move(assignment)));
    }

  return validate_diagram(std::move(poset), std::move(spaces), std::move(maps));
}

Measure random_measure(const FiniteSpace& sp, Rng& rng) {
  std::vector<long> ints(sp.size());
  long total = 0;
  for (auto& v : ints) {
    v = static_cast<long>(rng.below(9));
    total += v;
  }
  if (total == 0) {
    ints[rng.below(ints.size())] = 1;
    total = 1;
  }
  RatVec weights(sp.size());
  for (int p = 0; p < sp.size(); ++p) {
    weights[p] = Rat(ints[p], total);
    weights[p].canonicalize();
  }
  return make_measure(sp, std::move(weights));
}

Cone random_cone(const Diagram& d, const LimitSpace& lim, Rng& rng,
                 int apex_size) {
  require(lim.size() > 0 || apex_size == 0, Ec::EmptyLimit,
          "no cones with a nonempty apex over an empty limit");
  std::vector<std::string> points(apex_size);
  for (int t = 0; t < apex_size; ++t) points[t] = "t" + std::to_string(t);
  FiniteSpace apex = make_space("T", std::move(points));

  std::vector<std::vector<int>> legs(d.poset.n(), std::vector<int>(apex_size));
  for (int t = 0; t < apex_size; ++t) {
    const std::vector<int>& tuple = lim.elements[rng.below(lim.size())];
    for (int i = 0; i < d.poset.n(); ++i) legs[i][t] = tuple[i];
  }
  return make_cone(d, std::move(apex), std::move(legs));
}

DiagramMorphism random_quotient_morphism(const Diagram& d, Rng& rng) {
  const int n = d.poset.n();

  // union-find per index
  std::vector<std::vector<int>> parent(n);
  for (int i = 0; i < n; ++i) {
    parent[i].resize(d.space(i).size());
    std::iota(parent[i].begin(), parent[i].end(), 0);
  }
  auto find = [&](int i, int x) {
    while (parent[i][x] != x) x = parent[i][x] = parent[i][parent[i][x]];
    return x;
  };
  auto unite = [&](int i, int x, int y) {
    x = find(i, x);
    y = find(i, y);
    if (x == y) return false;
    parent[i][std::max(x, y)] = std::min(x, y);
    return true;
  };

  for (int i = 0; i < n; ++i) {
    int sz = d.space(i).size();
    int merges = static_cast<int>(rng.below(sz));
    for (int m = 0; m < merges; ++m)
      unite(i, static_cast<int>(rng.below(sz)), static_cast<int>(rng.below(sz)));
  }

  // close under the connecting maps so the quotient maps are well defined
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !d.poset.is_geq(i, j)) continue;
        const SpaceMap& phi = d.map_for(i, j);
        for (int x = 0; x < d.space(i).size(); ++x)
          for (int y = x + 1; y < d.space(i).size(); ++y)
            if (find(i, x) == find(i, y) && unite(j, phi(x), phi(y)))
              changed = true;
      }
  }

  // quotient spaces with classes ordered by smallest member
  std::vector<std::vector<int>> class_of(n);
  std::vector<FiniteSpace> qspaces;
  for (int i = 0; i < n; ++i) {
    class_of[i].assign(d.space(i).size(), -1);
    int next = 0;
    for (int x = 0; x < d.space(i).size(); ++x)
      if (find(i, x) == x) class_of[i][x] = next++;
    for (int x = 0; x < d.space(i).size(); ++x)
      class_of[i][x] = class_of[i][find(i, x)];
    std::vector<std::string> points(next);
    for (int c = 0; c < next; ++c) points[c] = "c" + std::to_string(c);
    qspaces.push_back(make_space(d.space(i).id + "q", std::move(points)));
  }

  std::map<std::pair<int, int>, SpaceMap> qmaps;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !d.poset.is_geq(i, j)) continue;
      const SpaceMap& phi = d.map_for(i, j);
      std::vector<int> assignment(qspaces[i].size(), -1);
      for (int x = 0; x < d.space(i).size(); ++x)
        assignment[class_of[i][x]] = class_of[j][phi(x)];
      qmaps.emplace(std::make_pair(i, j),
                    make_space_map(qspaces[i], qspaces[j], std::move(assignment)));
    }
  Diagram target = validate_diagram(d.poset, std::move(qspaces), std::move(qmaps));

  std::vector<SpaceMap> components;
  for (int i = 0; i < n; ++i) {
    SpaceMap f;
    f.source = d.space(i).id;
    f.target = target.space(i).id;
    f.assignment = class_of[i];
    components.push_back(std::move(f));
  }
  return make_diagram_morphism(d, std::move(target), std::move(components));
}

}  // namespace openchi
