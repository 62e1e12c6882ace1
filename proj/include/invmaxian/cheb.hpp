#pragma once

#include <optional>
#include <vector>

#include "invmaxian/instance.hpp"
#include "invmaxian/report.hpp"

namespace invmaxian {

/// Budget-C greedy plan: x_e = min(C / c_e, bound_e), and x_e = bound_e for
/// zero-cost edges. Nondecreasing in C; its Chebyshev cost never exceeds C.
[[nodiscard]] ModificationPlan apply_valid_modification(const NormalizedInstance& norm, const Rational& budget);

/// Distinct positive values of c_e * bound_e in ascending order.
[[nodiscard]] std::vector<Rational> breakpoint_ladder(const NormalizedInstance& norm);

struct Bracket {
  std::size_t index = 0;  // 1-based ladder index i0; 0 means the zero budget is feasible
  Rational lo;            // C_{i0-1}, with C_0 = 0
  Rational hi;            // C_{i0}
  ModificationPlan plan;  // valid modification at `hi`
};

/// Binary search for the smallest ladder value whose valid modification is
/// feasible. nullopt when even the top of the ladder fails.
[[nodiscard]] std::optional<Bracket> phase1_bracket(const NormalizedInstance& norm);

/// Exact minimal budget inside (lo, hi]. Edges with c_e * bound_e <= lo are
/// frozen at their bound; every other edge moves at rate 1/c_e, so each row
/// is affine in C and its crossing point solves in closed form.
[[nodiscard]] ThresholdTrace phase2_threshold(const NormalizedInstance& norm, const Rational& lo, const Rational& hi);

[[nodiscard]] SolveReport solve_chebyshev(const NormalizedInstance& norm);

}  // namespace invmaxian
