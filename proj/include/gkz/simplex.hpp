#pragma once

#include <optional>

#include "gkz/numtypes.hpp"

namespace gkz {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status;
  Rat value;      // objective at optimum
  VecQ x;         // primal solution
};

// maximize c.x subject to A x = b, x >= 0, exact rational arithmetic.
// Bland's rule, so termination is guaranteed.
LPResult lp_max(const std::vector<VecQ>& a, const VecQ& b, const VecQ& c);

// Existence of x with A x = b, x_i >= 0 for all i and x_i > 0 for i in
// strict.  Decided exactly as max delta <= 1 over the widened system.
bool strict_feasible(const std::vector<VecQ>& a, const VecQ& b,
                     const std::vector<bool>& strict);

}  // namespace gkz
