#pragma once

#include <string>
#include <vector>

#include "invmaxian/instance.hpp"
#include "invmaxian/report.hpp"

namespace invmaxian {

struct SolveOptions {
  std::size_t hamming_sum_limit = 24;
  bool parallel = false;  // solve pairs on separate threads
};

/// Solves the 2-maxian subproblem for the pair (a, b) under inst.objective.
[[nodiscard]] SolveReport solve_pair(const InverseInstance& inst, VertexId a, VertexId b,
                                     const SolveOptions& options = {});

/// Solves every unordered target pair and keeps the cheapest feasible one.
/// Pairs are ordered as (min id, max id) lexicographically; equal costs keep
/// the first pair in that order. Infeasible only if every pair is.
[[nodiscard]] SolveReport solve_inverse_pmaxian(const InverseInstance& inst, const SolveOptions& options = {});

struct Verification {
  bool ok = true;
  std::vector<std::string> reasons;
};

/// Independent re-check of a report: bounds, nonnegative new lengths, the
/// weak longest-path criterion on the rebuilt tree, and the stated cost.
[[nodiscard]] Verification verify_solution(const InverseInstance& inst, const SolveReport& report);

}  // namespace invmaxian
