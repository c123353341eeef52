#pragma once

#include "siegel/rational.hpp"

namespace siegel {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rat objective;
  std::vector<Rat> x;
};

// Minimizes c.x subject to A x = b, x >= 0, in exact rational arithmetic.
// Two-phase simplex with Bland's (lowest index) pivot rule for both the
// entering and the leaving variable: deterministic and cycle-free, which
// makes every certificate reproducible bit for bit.
LpResult solve_lp(const RatMatrix& a, const std::vector<Rat>& b,
                  const std::vector<Rat>& c);

}  // namespace siegel
