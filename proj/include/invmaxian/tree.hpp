#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "invmaxian/rational.hpp"

namespace invmaxian {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational length;
};

struct Incidence {
  VertexId to = 0;
  EdgeId edge = 0;
};

/// Undirected tree with nonnegative vertex weights and edge lengths.
///
/// Construction validates the tree property (n-1 edges, connected, no
/// self loops) and nonnegativity; zero lengths are accepted so that modified
/// trees can be represented. Adjacency is stored as a CSR index.
class Tree {
 public:
  Tree(std::vector<Rational> weights, std::vector<Edge> edges);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return weights_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(e); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] const Rational& weight(VertexId v) const { return weights_.at(v); }
  [[nodiscard]] std::span<const Rational> weights() const noexcept { return weights_; }

  [[nodiscard]] std::span<const Incidence> neighbors(VertexId v) const;
  [[nodiscard]] std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  [[nodiscard]] bool is_leaf(VertexId v) const { return degree(v) == 1; }
  [[nodiscard]] std::vector<VertexId> leaves() const;

  /// Same topology and weights with replaced edge lengths.
  [[nodiscard]] Tree with_lengths(std::span<const Rational> lengths) const;

  void check_vertex(VertexId v) const;

 private:
  std::vector<Rational> weights_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> adjacency_;
};

/// The unique simple path between two vertices.
struct PathQuery {
  VertexId from = 0;
  VertexId to = 0;
  std::vector<EdgeId> edges;  // ordered from `from` to `to`
  Rational length;
};

struct LongestPathResult {
  VertexId s = 0;
  VertexId t = 0;
  Rational length;
};

enum class Side : std::uint8_t { A, B };

struct Violation {
  VertexId leaf = 0;
  Side side = Side::A;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct LongestPathCheck {
  bool holds = true;
  std::vector<Violation> violations;
};

/// Parent pointers of a traversal rooted at `root`; parent_edge of the root
/// is unused. `order` lists vertices in BFS order.
struct RootedView {
  VertexId root = 0;
  std::vector<VertexId> order;
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<Rational> depth;  // distance from root
};

[[nodiscard]] RootedView root_at(const Tree& tree, VertexId root);

[[nodiscard]] std::vector<Rational> distances_from(const Tree& tree, VertexId source);
[[nodiscard]] Rational distance(const Tree& tree, VertexId u, VertexId v);
[[nodiscard]] PathQuery path(const Tree& tree, VertexId u, VertexId v);

/// Double sweep: farthest vertex s from vertex 0, then farthest t from s.
/// Ties go to the lowest vertex index in both sweeps.
[[nodiscard]] LongestPathResult longest_path(const Tree& tree);

/// The vertex shared by P(a,v), P(b,v) and P(a,b), i.e. the point where v's
/// branch attaches to P(a,b).
[[nodiscard]] VertexId meeting_vertex(const Tree& tree, VertexId a, VertexId b, VertexId v);

/// F(X) = sum_i w_i * max_{x in X} d(v_i, x).
[[nodiscard]] Rational maxian_value(const Tree& tree, std::span<const VertexId> centers);

/// Weak longest-path criterion for the leaf pair (a, b): every other leaf v
/// must satisfy d(v, v_ab) <= d(a, v_ab) and d(v, v_ab) <= d(b, v_ab).
/// Every failing (leaf, side) pair is reported.
[[nodiscard]] LongestPathCheck is_weakly_longest(const Tree& tree, VertexId a, VertexId b);

}  // namespace invmaxian
