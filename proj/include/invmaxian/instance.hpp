#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invmaxian/rational.hpp"
#include "invmaxian/tree.hpp"

namespace invmaxian {

enum class Objective { L1, Chebyshev, HammingBottleneck, HammingSum };

[[nodiscard]] std::string_view to_string(Objective objective) noexcept;
/// Accepts the CLI spellings: l1, chebyshev, hamming-bottleneck, hamming-sum.
[[nodiscard]] std::optional<Objective> parse_objective(std::string_view name) noexcept;

/// Tree plus the prespecified target leaves and per-edge modification data.
struct InverseInstance {
  Tree tree;
  std::vector<VertexId> targets;
  std::vector<Rational> cost;       // c_e per unit (l1, Chebyshev) or per edge (Hamming)
  std::vector<Rational> inc_bound;  // largest allowed increase
  std::vector<Rational> dec_bound;  // largest allowed decrease
  Objective objective = Objective::L1;

  // Optional display names; empty means "use the index".
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;

  /// Throws Error{InvalidInstance / NotALeaf} on a broken invariant.
  void validate() const;

  [[nodiscard]] std::string vertex_name(VertexId v) const;
  [[nodiscard]] std::string edge_name(EdgeId e) const;
};

/// One constraint of the 2-maxian system: the path from `side` to `leaf`
/// (through the meeting vertex) must gain at least `rhs` in total.
struct GapRow {
  VertexId leaf = 0;
  Side side = Side::A;
  VertexId meet = 0;
  Rational rhs;  // d(leaf, meet) - d(side, meet); may be <= 0
};

/// Sign-resolved single-variable form of the 2-maxian subproblem for a pair
/// (a, b): on-path edges may only grow (sign +1, bound = inc_bound), all other
/// edges may only shrink (sign -1, bound = min(dec_bound, length)).
///
/// Rows are not stored with explicit supports. The path P(a,b) and a
/// parent-edge forest hanging off it are kept instead, so that all row sums of
/// a per-edge vector come out of one O(n) pass (`row_sums`).
class NormalizedInstance {
 public:
  VertexId a = 0;
  VertexId b = 0;
  std::vector<int> sign;
  std::vector<Rational> bound;
  std::vector<Rational> cost;
  std::vector<Rational> length;
  std::vector<GapRow> rows;

  [[nodiscard]] std::size_t edge_count() const noexcept { return sign.size(); }

  /// Edges of P(a,b), ordered from a to b.
  [[nodiscard]] const std::vector<EdgeId>& path_edges() const noexcept { return path_edges_; }

  /// Support edges of a row: P(side, meet) followed by P(meet, leaf).
  [[nodiscard]] std::vector<EdgeId> support(const GapRow& row) const;

  /// For each row r: sum over support(r) of values[e]. Linear time.
  [[nodiscard]] std::vector<Rational> row_sums(std::span<const Rational> values) const;

  /// Edges with bound > 0 that occur in the support of at least one row
  /// with rhs > 0; no other edge can help any constraint.
  [[nodiscard]] std::vector<char> relevant_edges() const;

  friend NormalizedInstance normalize(const InverseInstance& inst, VertexId a, VertexId b);

 private:
  std::vector<EdgeId> path_edges_;
  std::vector<std::size_t> path_position_;  // index along P(a,b), npos off-path
  // Off-path vertices in BFS order away from P(a,b), with their parent link.
  std::vector<VertexId> branch_order_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
};

[[nodiscard]] NormalizedInstance normalize(const InverseInstance& inst, VertexId a, VertexId b);

/// Per-edge modification amounts x_e in the normalized (sign-resolved) form.
struct ModificationPlan {
  std::vector<Rational> amount;
};

[[nodiscard]] std::vector<Rational> new_lengths(const NormalizedInstance& norm,
                                                const ModificationPlan& plan);

/// Objective value of a plan: sum c x, max c x, max c H(x) or sum c H(x).
[[nodiscard]] Rational plan_cost(Objective objective, std::span<const Rational> cost,
                                 const ModificationPlan& plan);

/// Bounds 0 <= x <= bound and every gap row.
[[nodiscard]] bool is_feasible(const NormalizedInstance& norm, const ModificationPlan& plan);

/// Leaves whose rows fail under `plan` (each leaf once, ascending).
[[nodiscard]] std::vector<VertexId> violating_leaves(const NormalizedInstance& norm,
                                                     const ModificationPlan& plan);

/// x_e = bound_e for every edge. The subproblem is feasible iff this plan is.
[[nodiscard]] ModificationPlan saturated_plan(const NormalizedInstance& norm);

}  // namespace invmaxian
