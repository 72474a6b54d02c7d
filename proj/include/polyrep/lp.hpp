#pragma once

#include <vector>

#include "polyrep/rational.hpp"

// Exact rational linear programming via primal simplex with Bland's rule.
// Problem sizes here are tiny (cone feasibility certificates, interior
// margins), so the full-tableau method is plenty.

namespace polyrep {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rat value;
  VecQ x;
};

/// maximize c.x  s.t.  ge_lhs x >= ge_rhs  and  eq_lhs x == eq_rhs, x free.
LpSolution lp_solve(const VecQ& c, const MatQ& ge_lhs, const VecQ& ge_rhs,
                    const MatQ& eq_lhs, const VecQ& eq_rhs);

/// Does {x : ge_lhs x >= ge_rhs} have a solution?
bool lp_feasible(const MatQ& ge_lhs, const VecQ& ge_rhs);

/// Strict homogeneous system lhs x > 0: feasible iff lhs x >= 1 is.
bool cone_strictly_feasible(const MatQ& lhs);

}  // namespace polyrep
