#pragma once

#include <map>

#include "openchi/diagram.hpp"

namespace openchi {

// Limit of a diagram: all tuples (one point per index) compatible with
// every map. Elements are stored as full tuples in lexicographic order
// induced by the canonical point orders. May be empty.
struct LimitSpace {
  std::vector<std::vector<int>> elements;
  std::vector<int> maximal;  // copy of poset.maximal

  int size() const { return static_cast<int>(elements.size()); }

  // Index of a full tuple, or -1.
  int element_index(const std::vector<int>& tuple) const;
};

LimitSpace compute_limit(const Diagram& d);

std::string limit_element_label(const Diagram& d, const std::vector<int>& tuple);

// The limit presented as a finite space, point labels are tuple labels.
FiniteSpace limit_as_space(const Diagram& d, const LimitSpace& lim);

// Injective embedding into the product of the maximal-index spaces.
struct LimitEmbedding {
  std::vector<int> maximal;
  std::vector<std::vector<int>> image;          // per element: maximal coordinates
  std::map<std::vector<int>, int> preimage_of;  // maximal tuple -> element index
};

LimitEmbedding limit_embedding(const LimitSpace& lim);

// Coordinate projection pi_i as a map from the limit space to X_i.
SpaceMap limit_projection(const Diagram& d, const LimitSpace& lim, int i);

}  // namespace openchi
