#pragma once

#include "openchi/limit.hpp"

namespace openchi {

// Cone over a diagram: an apex space T with one leg h_i : T -> X_i per
// index, commuting with every diagram map.
struct Cone {
  FiniteSpace apex;
  std::vector<std::vector<int>> legs;  // legs[i][t] = point index in X_i
};

Cone make_cone(const Diagram& d, FiniteSpace apex,
               std::vector<std::vector<int>> legs);

// The induced map T -> lim D. Lands in the limit by leg coherence.
SpaceMap cone_characteristic_map(const Diagram& d, const LimitSpace& lim,
                                 const Cone& cone);

struct ConeVerdict {
  bool open_multicommutative = false;  // for finite discrete spaces: onto
  bool surjective = false;
  std::string missed_element;  // tuple label when not surjective
};

ConeVerdict check_cone_open_multicommutative(const Diagram& d,
                                             const LimitSpace& lim,
                                             const Cone& cone);

// Commutative square p.f = q.g with f : X -> Y, g : X -> Z,
// p : Y -> T, q : Z -> T.
struct CommutativeSquare {
  FiniteSpace x, y, z, t;
  SpaceMap f, g, p, q;
};

struct PullbackData {
  FiniteSpace pullback;                  // pairs (y, z) with p(y) = q(z)
  std::vector<std::pair<int, int>> pairs;
  SpaceMap proj_y, proj_z;
};

PullbackData pullback_square(const CommutativeSquare& sq);

struct BicommutativeVerdict {
  bool bicommutative = false;  // (f, g) : X -> Y x_T Z is onto
  std::string missed_pair;
};

BicommutativeVerdict check_bicommutative(const CommutativeSquare& sq);

}  // namespace openchi
