#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace openchi {

// All arithmetic on weights, constraints, and certificates is exact.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Accepts "p/q" or "p" with optional sign; canonicalizes to lowest terms.
Rat rat_parse(const std::string& text);

// Lowest terms; denominator 1 renders as a plain integer.
std::string rat_str(const Rat& q);

inline int rat_sign(const Rat& q) { return sgn(q); }

inline double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace openchi
