#pragma once

#include "openchi/rational.hpp"

#include <optional>

namespace openchi {

// Exact dense linear algebra helpers. Pivot selection is deterministic
// (first usable row/column) so downstream outputs are reproducible.

// In-place reduced row echelon form; returns the rank.
int rref(RatMat& m);

int rank_of(RatMat m);

// Basis of {x : m x = 0} in R^dim, one vector per free column.
RatMat nullspace_basis(const RatMat& m, int dim);

// One solution of a x = b, if any.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

RatVec mat_apply(const RatMat& m, const RatVec& v);
RatMat mat_mul(const RatMat& a, const RatMat& b);

Rat dot(const RatVec& a, const RatVec& b);
bool is_zero_vec(const RatVec& v);

// Scales v to a primitive integer vector with the same direction.
// Canonical representative for rays and row normalization.
RatVec primitive_direction(RatVec v);

}  // namespace openchi
