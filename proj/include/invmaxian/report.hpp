#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "invmaxian/instance.hpp"

namespace invmaxian {

enum class Status { Optimal, Infeasible };

[[nodiscard]] inline std::string_view to_string(Status s) noexcept {
  return s == Status::Optimal ? "OPTIMAL" : "INFEASIBLE";
}

/// Primal/dual pair for  min c.x  s.t.  A x >= b, 0 <= x <= u.
/// Dual:  max b.y - u.z  s.t.  A^T y - z <= c, y >= 0, z >= 0.
struct LpCertificate {
  std::vector<Rational> primal;       // x
  std::vector<Rational> row_duals;    // y, one per row
  std::vector<Rational> bound_duals;  // z, one per upper bound
  Rational primal_objective;
  Rational dual_objective;
};

enum class StarCase { AtMostLongerTarget = 1, AboveLongerTarget = 2 };

struct StarAdjustment {
  EdgeId edge = 0;
  Rational from;
  Rational to;
};

/// Outcome of the two-case univariate search on a star. `level` is the common
/// new length z of the shorter target edge (and, in case 2, of both).
struct StarCaseResult {
  StarCase which = StarCase::AtMostLongerTarget;
  bool feasible = false;
  Rational level;
  Rational interval_lo;
  Rational interval_hi;
  Rational presolve_cost;
  Rational search_cost;  // f(level)
  Rational cost;         // presolve_cost + search_cost
  std::vector<StarAdjustment> presolve;
};

struct StarReport {
  bool swapped = false;  // true when the input pair was reordered so that l_a <= l_b
  StarCaseResult case1;
  StarCaseResult case2;
  std::optional<StarCase> chosen;
};

/// Bracket and per-row thresholds of the Chebyshev budget search.
struct ThresholdTrace {
  std::vector<Rational> ladder;  // distinct positive c_e * bound_e, ascending
  std::size_t bracket_index = 0; // i0, 1-based into the ladder; 0 when C = 0 suffices
  Rational bracket_lo;
  Rational bracket_hi;
  struct RowThreshold {
    std::size_t row = 0;
    Rational threshold;
  };
  std::vector<RowThreshold> thresholds;  // rows violated at bracket_lo
  std::size_t tight_row = 0;
  Rational budget;  // C*
};

/// Threshold search (bottleneck) or branch-and-bound statistics (sum).
struct HammingTrace {
  std::vector<Rational> ladder;          // distinct candidate cost values, ascending
  std::vector<EdgeId> selection;         // edges set to their bound
  Rational threshold;                    // bottleneck: c*
  std::size_t nodes_explored = 0;        // sum: branch-and-bound nodes
};

using Certificate = std::variant<std::monostate, LpCertificate, StarReport, ThresholdTrace, HammingTrace>;

/// Result of one target pair's subproblem.
struct PairOutcome {
  VertexId a = 0;
  VertexId b = 0;
  Status status = Status::Infeasible;
  Rational cost;
};

struct SolveReport {
  Status status = Status::Infeasible;
  Objective objective = Objective::L1;
  VertexId a = 0;
  VertexId b = 0;
  ModificationPlan plan;      // normalized amounts, indexed by edge
  std::vector<int> sign;      // +1 increase / -1 decrease, indexed by edge
  Rational cost;
  std::vector<VertexId> violating_leaves;  // only when infeasible
  Certificate certificate;
  std::vector<PairOutcome> pairs;          // filled by the p-maxian driver
};

}  // namespace invmaxian
