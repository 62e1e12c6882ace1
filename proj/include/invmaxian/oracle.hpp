#pragma once

#include <optional>
#include <vector>

#include "invmaxian/instance.hpp"

namespace invmaxian::oracle {

// Brute-force references. They share is_feasible / apply_valid_modification
// with the solvers and nothing else; distances are recomputed from scratch.

struct MaxianResult {
  std::vector<VertexId> best;                     // lexicographically first optimum
  Rational value;
  std::vector<std::vector<VertexId>> optimal_sets;  // every optimum, lexicographic order
};

/// All-pairs distances by Floyd-Warshall over the edge list.
[[nodiscard]] std::vector<std::vector<Rational>> all_pair_distances(const Tree& tree);

/// F(X) from a precomputed distance matrix.
[[nodiscard]] Rational maxian_value(const Tree& tree, const std::vector<std::vector<Rational>>& dist,
                                    const std::vector<VertexId>& centers);

/// Exhaustive p-maxian over all vertex subsets of size p (1 <= p <= 3, n <= 50).
[[nodiscard]] MaxianResult maxian(const Tree& tree, std::size_t p);

/// Bisection on the budget down to width 2^-40, then an exact snap onto the
/// crossing point of the row that is tight there. nullopt when infeasible.
[[nodiscard]] std::optional<Rational> chebyshev(const NormalizedInstance& norm);

/// Minimum l1 cost over every integer plan 0 <= x <= bound. Requires integer
/// bounds and prod(bound_e + 1) <= 10^6. nullopt when no plan is feasible.
[[nodiscard]] std::optional<Rational> l1_integer(const NormalizedInstance& norm);

enum class HammingVariant { Bottleneck, Sum };

struct HammingResult {
  std::optional<Rational> cost;
  std::vector<EdgeId> selection;
};

/// Bottleneck: every distinct cost threshold in ascending order.
/// Sum: every edge subset (edge count <= 20), ties by indicator order.
[[nodiscard]] HammingResult hamming(const NormalizedInstance& norm, HammingVariant variant);

}  // namespace invmaxian::oracle
