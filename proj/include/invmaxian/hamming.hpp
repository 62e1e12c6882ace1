#pragma once

#include <cstddef>
#include <vector>

#include "invmaxian/instance.hpp"
#include "invmaxian/report.hpp"

namespace invmaxian {

// Under either Hamming cost only *which* edges move matters, not by how much,
// and row left-hand sides grow with x. So every used edge can be pushed to its
// bound: a selection S is feasible iff its saturation plan is.

/// x_e = bound_e for e in `selection`, 0 elsewhere.
[[nodiscard]] ModificationPlan selection_plan(const NormalizedInstance& norm, const std::vector<EdgeId>& selection);

/// Smallest c* in {0} u {c_e : bound_e > 0} such that saturating every edge
/// with c_e <= c* is feasible; binary search over the distinct values.
[[nodiscard]] SolveReport solve_hamming_bottleneck(const NormalizedInstance& norm);

inline constexpr std::size_t kDefaultHammingSumLimit = 24;

/// Exact minimum of sum_{e in S} c_e by depth-first branch and bound over the
/// candidate edges (bound > 0, in some violated row's support) in descending
/// cost order. Ties go to the lexicographically smallest indicator vector
/// (x_0, x_1, ...), i.e. low-index edges are left out when possible.
/// Throws Error{SizeLimitExceeded} above `size_limit` candidates.
[[nodiscard]] SolveReport solve_hamming_sum_exact(const NormalizedInstance& norm,
                                                  std::size_t size_limit = kDefaultHammingSumLimit);

/// Indicator-vector order used for ties; both inputs sorted ascending.
[[nodiscard]] bool selection_less(const std::vector<EdgeId>& lhs, const std::vector<EdgeId>& rhs);

}  // namespace invmaxian
