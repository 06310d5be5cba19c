#pragma once

#include <vector>

#include "qpot/numeric.hpp"

namespace qpot {

// Exact rational simplex (Bland's rule), desk scale.
// min c.x subject to A x = b, x >= 0.
struct LpResult {
  bool feasible = false;
  bool bounded = true;
  Rat objective;
  RatVec x;
};

LpResult solve_lp(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c);

// q in conv(points)?
bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& q);

// q in relint(conv(points))?
bool in_relative_interior(const std::vector<RatVec>& points, const RatVec& q);

}  // namespace qpot
