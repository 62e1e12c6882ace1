#include "invmaxian/tree.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "invmaxian/error.hpp"

namespace invmaxian {

namespace {
constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
}

Tree::Tree(std::vector<Rational> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  const std::size_t n = weights_.size();
  if (n == 0) throw Error(ErrorCode::InvalidInstance, "tree has no vertices");
  if (edges_.size() != n - 1) {
    throw Error(ErrorCode::InvalidInstance,
                "not a tree: " + std::to_string(n) + " vertices but " +
                    std::to_string(edges_.size()) + " edges");
  }
  for (VertexId v = 0; v < n; ++v) {
    if (sgn(weights_[v]) < 0) {
      throw Error(ErrorCode::InvalidInstance, "negative weight on vertex " + std::to_string(v));
    }
  }
  offsets_.assign(n + 1, 0);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (ed.u >= n || ed.v >= n) {
      throw Error(ErrorCode::InvalidVertex, "edge " + std::to_string(e) + " references a missing vertex");
    }
    if (ed.u == ed.v) throw Error(ErrorCode::InvalidInstance, "not a tree: self loop on edge " + std::to_string(e));
    if (sgn(ed.length) < 0) throw Error(ErrorCode::InvalidInstance, "negative length on edge " + std::to_string(e));
    ++offsets_[ed.u + 1];
    ++offsets_[ed.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    adjacency_[fill[edges_[e].u]++] = {edges_[e].v, e};
    adjacency_[fill[edges_[e].v]++] = {edges_[e].u, e};
  }

  // n-1 edges + connected => acyclic
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const auto& inc : neighbors(x)) {
      if (!seen[inc.to]) {
        seen[inc.to] = 1;
        ++reached;
        stack.push_back(inc.to);
      }
    }
  }
  if (reached != n) {
    VertexId missing = static_cast<VertexId>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    throw Error(ErrorCode::InvalidInstance,
                "not a tree: vertex " + std::to_string(missing) + " is unreachable from vertex 0");
  }
}

std::span<const Incidence> Tree::neighbors(VertexId v) const {
  check_vertex(v);
  return std::span<const Incidence>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::vector<VertexId> Tree::leaves() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

Tree Tree::with_lengths(std::span<const Rational> lengths) const {
  if (lengths.size() != edges_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "length vector does not match edge count");
  }
  std::vector<Edge> edges = edges_;
  for (EdgeId e = 0; e < edges.size(); ++e) edges[e].length = lengths[e];
  return Tree(weights_, std::move(edges));
}

void Tree::check_vertex(VertexId v) const {
  if (v >= weights_.size()) {
    throw Error(ErrorCode::InvalidVertex, "vertex index " + std::to_string(v) + " out of range");
  }
}

RootedView root_at(const Tree& tree, VertexId root) {
  tree.check_vertex(root);
  const std::size_t n = tree.vertex_count();
  RootedView view;
  view.root = root;
  view.order.reserve(n);
  view.parent.assign(n, kNone);
  view.parent_edge.assign(n, kNone);
  view.depth.assign(n, Rational(0));
  view.order.push_back(root);
  view.parent[root] = root;
  for (std::size_t head = 0; head < view.order.size(); ++head) {
    const VertexId x = view.order[head];
    for (const auto& inc : tree.neighbors(x)) {
      if (view.parent[inc.to] != kNone) continue;
      view.parent[inc.to] = x;
      view.parent_edge[inc.to] = inc.edge;
      view.depth[inc.to] = view.depth[x] + tree.edge(inc.edge).length;
      view.order.push_back(inc.to);
    }
  }
  return view;
}

std::vector<Rational> distances_from(const Tree& tree, VertexId source) {
  return root_at(tree, source).depth;
}

Rational distance(const Tree& tree, VertexId u, VertexId v) {
  tree.check_vertex(v);
  return path(tree, u, v).length;
}

PathQuery path(const Tree& tree, VertexId u, VertexId v) {
  tree.check_vertex(u);
  tree.check_vertex(v);
  const RootedView view = root_at(tree, v);
  PathQuery q;
  q.from = u;
  q.to = v;
  q.length = view.depth[u];
  for (VertexId x = u; x != v; x = view.parent[x]) q.edges.push_back(view.parent_edge[x]);
  return q;
}

namespace {
VertexId farthest(const std::vector<Rational>& dist) {
  VertexId best = 0;
  for (VertexId v = 1; v < dist.size(); ++v) {
    if (dist[v] > dist[best]) best = v;
  }
  return best;
}
}  // namespace

LongestPathResult longest_path(const Tree& tree) {
  const VertexId s = farthest(distances_from(tree, 0));
  const auto from_s = distances_from(tree, s);
  const VertexId t = farthest(from_s);
  return {s, t, from_s[t]};
}

VertexId meeting_vertex(const Tree& tree, VertexId a, VertexId b, VertexId v) {
  tree.check_vertex(a);
  tree.check_vertex(b);
  if (a == b) throw Error(ErrorCode::InvalidVertex, "meeting vertex needs two distinct vertices");
  const RootedView view = root_at(tree, v);
  std::vector<char> on_a_branch(tree.vertex_count(), 0);
  for (VertexId x = a;; x = view.parent[x]) {
    on_a_branch[x] = 1;
    if (x == v) break;
  }
  VertexId x = b;
  while (!on_a_branch[x]) x = view.parent[x];
  return x;
}

Rational maxian_value(const Tree& tree, std::span<const VertexId> centers) {
  if (centers.empty()) throw Error(ErrorCode::EmptySet, "maxian objective needs at least one center");
  std::vector<Rational> farthest_center(tree.vertex_count(), Rational(0));
  for (VertexId c : centers) {
    const auto dist = distances_from(tree, c);
    for (VertexId v = 0; v < dist.size(); ++v) {
      if (dist[v] > farthest_center[v]) farthest_center[v] = dist[v];
    }
  }
  Rational total = 0;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) total += tree.weight(v) * farthest_center[v];
  return total;
}

LongestPathCheck is_weakly_longest(const Tree& tree, VertexId a, VertexId b) {
  tree.check_vertex(a);
  tree.check_vertex(b);
  if (a == b) throw Error(ErrorCode::InvalidVertex, "criterion needs two distinct leaves");
  for (VertexId x : {a, b}) {
    if (!tree.is_leaf(x)) throw Error(ErrorCode::NotALeaf, "vertex " + std::to_string(x) + " is not a leaf");
  }
  // Root at a: the meeting vertex of leaf v is the deepest ancestor of v on P(a,b).
  const RootedView view = root_at(tree, a);
  const Rational& dab = view.depth[b];
  std::vector<char> on_path(tree.vertex_count(), 0);
  for (VertexId x = b;; x = view.parent[x]) {
    on_path[x] = 1;
    if (x == a) break;
  }
  std::vector<VertexId> meet(tree.vertex_count(), kNone);
  for (VertexId x : view.order) meet[x] = on_path[x] ? x : meet[view.parent[x]];

  LongestPathCheck check;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    if (v == a || v == b || !tree.is_leaf(v)) continue;
    const VertexId m = meet[v];
    const Rational branch = view.depth[v] - view.depth[m];
    const Rational to_a = view.depth[m];
    const Rational to_b = dab - view.depth[m];
    if (branch > to_a) check.violations.push_back({v, Side::A});
    if (branch > to_b) check.violations.push_back({v, Side::B});
  }
  check.holds = check.violations.empty();
  return check;
}

}  // namespace invmaxian
