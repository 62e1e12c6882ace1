#include "invmaxian/instance.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "invmaxian/error.hpp"

namespace invmaxian {

namespace {
constexpr std::size_t kOffPath = std::numeric_limits<std::size_t>::max();
}

std::string_view to_string(Objective objective) noexcept {
  switch (objective) {
    case Objective::L1: return "l1";
    case Objective::Chebyshev: return "chebyshev";
    case Objective::HammingBottleneck: return "hamming-bottleneck";
    case Objective::HammingSum: return "hamming-sum";
  }
  return "?";
}

std::optional<Objective> parse_objective(std::string_view name) noexcept {
  if (name == "l1") return Objective::L1;
  if (name == "chebyshev") return Objective::Chebyshev;
  if (name == "hamming-bottleneck") return Objective::HammingBottleneck;
  if (name == "hamming-sum") return Objective::HammingSum;
  return std::nullopt;
}

void InverseInstance::validate() const {
  const std::size_t m = tree.edge_count();
  if (cost.size() != m || inc_bound.size() != m || dec_bound.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "per-edge data does not match the edge count");
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (sgn(cost[e]) < 0) throw Error(ErrorCode::InvalidInstance, "negative cost on edge " + edge_name(e));
    if (sgn(inc_bound[e]) < 0) throw Error(ErrorCode::InvalidInstance, "negative inc_bound on edge " + edge_name(e));
    if (sgn(dec_bound[e]) < 0) throw Error(ErrorCode::InvalidInstance, "negative dec_bound on edge " + edge_name(e));
  }
  if (targets.size() < 2) throw Error(ErrorCode::InvalidInstance, "need at least two targets");
  std::vector<VertexId> sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidInstance, "duplicate target");
  }
  for (VertexId t : targets) {
    tree.check_vertex(t);
    if (!tree.is_leaf(t)) throw Error(ErrorCode::NotALeaf, "target " + vertex_name(t) + " is not a leaf");
  }
}

std::string InverseInstance::vertex_name(VertexId v) const {
  return v < vertex_names.size() ? vertex_names[v] : std::to_string(v);
}

std::string InverseInstance::edge_name(EdgeId e) const {
  return e < edge_names.size() ? edge_names[e] : std::to_string(e);
}

NormalizedInstance normalize(const InverseInstance& inst, VertexId a, VertexId b) {
  const Tree& tree = inst.tree;
  tree.check_vertex(a);
  tree.check_vertex(b);
  if (a == b) throw Error(ErrorCode::InvalidVertex, "target pair must consist of two distinct vertices");
  for (VertexId x : {a, b}) {
    if (!tree.is_leaf(x)) throw Error(ErrorCode::NotALeaf, "target " + inst.vertex_name(x) + " is not a leaf");
    if (std::find(inst.targets.begin(), inst.targets.end(), x) == inst.targets.end()) {
      throw Error(ErrorCode::InvalidVertex, "vertex " + inst.vertex_name(x) + " is not a target");
    }
  }
  const std::size_t n = tree.vertex_count();
  const std::size_t m = tree.edge_count();
  if (inst.cost.size() != m || inst.inc_bound.size() != m || inst.dec_bound.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "per-edge data does not match the edge count");
  }

  NormalizedInstance norm;
  norm.a = a;
  norm.b = b;
  norm.cost = inst.cost;
  norm.length.reserve(m);
  for (const auto& e : tree.edges()) norm.length.push_back(e.length);

  const RootedView from_a = root_at(tree, a);
  std::vector<VertexId> path_vertices;
  for (VertexId x = b;; x = from_a.parent[x]) {
    path_vertices.push_back(x);
    if (x == a) break;
  }
  std::reverse(path_vertices.begin(), path_vertices.end());
  norm.path_position_.assign(n, kOffPath);
  for (std::size_t i = 0; i < path_vertices.size(); ++i) {
    norm.path_position_[path_vertices[i]] = i;
    if (i > 0) norm.path_edges_.push_back(from_a.parent_edge[path_vertices[i]]);
  }

  norm.sign.assign(m, -1);
  for (EdgeId e : norm.path_edges_) norm.sign[e] = +1;
  norm.bound.resize(m);
  for (EdgeId e = 0; e < m; ++e) {
    norm.bound[e] = norm.sign[e] > 0 ? inst.inc_bound[e] : std::min(inst.dec_bound[e], norm.length[e]);
  }

  // Grow the forest hanging off P(a,b).
  norm.parent_.assign(n, 0);
  norm.parent_edge_.assign(n, 0);
  std::vector<VertexId> attach(n);
  std::vector<Rational> branch_depth(n, Rational(0));
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue = path_vertices;
  for (VertexId x : path_vertices) {
    seen[x] = 1;
    attach[x] = x;
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (const auto& inc : tree.neighbors(x)) {
      if (seen[inc.to]) continue;
      seen[inc.to] = 1;
      norm.parent_[inc.to] = x;
      norm.parent_edge_[inc.to] = inc.edge;
      attach[inc.to] = attach[x];
      branch_depth[inc.to] = branch_depth[x] + norm.length[inc.edge];
      norm.branch_order_.push_back(inc.to);
      queue.push_back(inc.to);
    }
  }

  const Rational& dab = from_a.depth[b];
  for (VertexId v = 0; v < n; ++v) {
    if (v == a || v == b || !tree.is_leaf(v)) continue;
    const VertexId meet = attach[v];
    const Rational& to_a = from_a.depth[meet];
    const Rational to_b = dab - to_a;
    norm.rows.push_back({v, Side::A, meet, branch_depth[v] - to_a});
    norm.rows.push_back({v, Side::B, meet, branch_depth[v] - to_b});
  }
  return norm;
}

std::vector<EdgeId> NormalizedInstance::support(const GapRow& row) const {
  std::vector<EdgeId> out;
  const std::size_t pos = path_position_.at(row.meet);
  if (row.side == Side::A) {
    out.assign(path_edges_.begin(), path_edges_.begin() + static_cast<std::ptrdiff_t>(pos));
  } else {
    out.assign(path_edges_.begin() + static_cast<std::ptrdiff_t>(pos), path_edges_.end());
  }
  for (VertexId x = row.leaf; path_position_[x] == kOffPath; x = parent_[x]) out.push_back(parent_edge_[x]);
  return out;
}

std::vector<Rational> NormalizedInstance::row_sums(std::span<const Rational> values) const {
  if (values.size() != edge_count()) {
    throw Error(ErrorCode::DimensionMismatch, "per-edge vector does not match the edge count");
  }
  std::vector<Rational> prefix(path_edges_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < path_edges_.size(); ++i) prefix[i + 1] = prefix[i] + values[path_edges_[i]];
  std::vector<Rational> down(path_position_.size(), Rational(0));
  for (VertexId x : branch_order_) down[x] = down[parent_[x]] + values[parent_edge_[x]];

  std::vector<Rational> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const std::size_t pos = path_position_[row.meet];
    if (row.side == Side::A) {
      out.push_back(prefix[pos] + down[row.leaf]);
    } else {
      out.push_back(prefix.back() - prefix[pos] + down[row.leaf]);
    }
  }
  return out;
}

std::vector<char> NormalizedInstance::relevant_edges() const {
  std::vector<char> in_support(edge_count(), 0);
  std::size_t a_reach = 0;                    // path edges [0, a_reach) serve some side-A row
  std::size_t b_from = path_edges_.size();    // path edges [b_from, end) serve some side-B row
  for (const auto& row : rows) {
    if (sgn(row.rhs) <= 0) continue;
    const std::size_t pos = path_position_[row.meet];
    if (row.side == Side::A) a_reach = std::max(a_reach, pos);
    else b_from = std::min(b_from, pos);
    for (VertexId x = row.leaf; path_position_[x] == kOffPath && !in_support[parent_edge_[x]]; x = parent_[x]) {
      in_support[parent_edge_[x]] = 1;
    }
  }
  for (std::size_t i = 0; i < path_edges_.size(); ++i) {
    if (i < a_reach || i >= b_from) in_support[path_edges_[i]] = 1;
  }
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (sgn(bound[e]) <= 0) in_support[e] = 0;
  }
  return in_support;
}

std::vector<Rational> new_lengths(const NormalizedInstance& norm, const ModificationPlan& plan) {
  if (plan.amount.size() != norm.edge_count()) {
    throw Error(ErrorCode::DimensionMismatch, "plan does not match the edge count");
  }
  std::vector<Rational> out(norm.edge_count());
  for (EdgeId e = 0; e < out.size(); ++e) {
    out[e] = norm.length[e];
    if (norm.sign[e] > 0) out[e] += plan.amount[e];
    else out[e] -= plan.amount[e];
  }
  return out;
}

Rational plan_cost(Objective objective, std::span<const Rational> cost, const ModificationPlan& plan) {
  if (cost.size() != plan.amount.size()) {
    throw Error(ErrorCode::DimensionMismatch, "plan does not match the cost vector");
  }
  Rational total = 0;
  for (std::size_t e = 0; e < cost.size(); ++e) {
    const Rational& x = plan.amount[e];
    switch (objective) {
      case Objective::L1: total += cost[e] * x; break;
      case Objective::Chebyshev: total = std::max(total, Rational(cost[e] * x)); break;
      case Objective::HammingBottleneck:
        if (sgn(x) != 0) total = std::max(total, cost[e]);
        break;
      case Objective::HammingSum:
        if (sgn(x) != 0) total += cost[e];
        break;
    }
  }
  return total;
}

namespace {
bool within_bounds(const NormalizedInstance& norm, const ModificationPlan& plan) {
  for (EdgeId e = 0; e < norm.edge_count(); ++e) {
    if (sgn(plan.amount[e]) < 0 || plan.amount[e] > norm.bound[e]) return false;
  }
  return true;
}
}  // namespace

bool is_feasible(const NormalizedInstance& norm, const ModificationPlan& plan) {
  if (plan.amount.size() != norm.edge_count()) {
    throw Error(ErrorCode::DimensionMismatch, "plan does not match the edge count");
  }
  if (!within_bounds(norm, plan)) return false;
  const auto lhs = norm.row_sums(plan.amount);
  for (std::size_t r = 0; r < norm.rows.size(); ++r) {
    if (lhs[r] < norm.rows[r].rhs) return false;
  }
  return true;
}

std::vector<VertexId> violating_leaves(const NormalizedInstance& norm, const ModificationPlan& plan) {
  const auto lhs = norm.row_sums(plan.amount);
  std::vector<VertexId> out;
  for (std::size_t r = 0; r < norm.rows.size(); ++r) {
    if (lhs[r] < norm.rows[r].rhs) out.push_back(norm.rows[r].leaf);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ModificationPlan saturated_plan(const NormalizedInstance& norm) { return {norm.bound}; }

}  // namespace invmaxian
