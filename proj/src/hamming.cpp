#include "invmaxian/hamming.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "invmaxian/error.hpp"

namespace invmaxian {

ModificationPlan selection_plan(const NormalizedInstance& norm, const std::vector<EdgeId>& selection) {
  ModificationPlan plan{zeros(norm.edge_count())};
  for (EdgeId e : selection) plan.amount.at(e) = norm.bound[e];
  return plan;
}

bool selection_less(const std::vector<EdgeId>& lhs, const std::vector<EdgeId>& rhs) {
  // First edge where membership differs decides: the side without it is smaller.
  std::size_t i = 0;
  while (i < lhs.size() && i < rhs.size() && lhs[i] == rhs[i]) ++i;
  if (i == lhs.size()) return i < rhs.size();
  if (i == rhs.size()) return false;
  return lhs[i] > rhs[i];
}

namespace {

SolveReport base_report(const NormalizedInstance& norm, Objective objective) {
  SolveReport report;
  report.objective = objective;
  report.a = norm.a;
  report.b = norm.b;
  report.sign = norm.sign;
  return report;
}

std::vector<EdgeId> used_edges(const NormalizedInstance& norm, const Rational& threshold) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < norm.edge_count(); ++e) {
    if (sgn(norm.bound[e]) > 0 && norm.cost[e] <= threshold) out.push_back(e);
  }
  return out;
}

}  // namespace

SolveReport solve_hamming_bottleneck(const NormalizedInstance& norm) {
  SolveReport report = base_report(norm, Objective::HammingBottleneck);
  HammingTrace trace;
  trace.ladder.push_back(Rational(0));
  for (EdgeId e = 0; e < norm.edge_count(); ++e) {
    if (sgn(norm.bound[e]) > 0) trace.ladder.push_back(norm.cost[e]);
  }
  std::sort(trace.ladder.begin(), trace.ladder.end());
  trace.ladder.erase(std::unique(trace.ladder.begin(), trace.ladder.end()), trace.ladder.end());

  auto feasible_at = [&](const Rational& c) { return is_feasible(norm, selection_plan(norm, used_edges(norm, c))); };
  if (!feasible_at(trace.ladder.back())) {
    report.status = Status::Infeasible;
    report.violating_leaves = violating_leaves(norm, saturated_plan(norm));
    report.certificate = std::move(trace);
    return report;
  }
  // first feasible index in [lo, hi]
  std::size_t lo = 0;
  std::size_t hi = trace.ladder.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible_at(trace.ladder[mid])) hi = mid;
    else lo = mid + 1;
  }
  trace.threshold = trace.ladder[lo];
  trace.selection = used_edges(norm, trace.threshold);
  report.status = Status::Optimal;
  report.plan = selection_plan(norm, trace.selection);
  report.cost = plan_cost(Objective::HammingBottleneck, norm.cost, report.plan);
  report.certificate = std::move(trace);
  return report;
}

SolveReport solve_hamming_sum_exact(const NormalizedInstance& norm, std::size_t size_limit) {
  SolveReport report = base_report(norm, Objective::HammingSum);
  const auto relevant = norm.relevant_edges();
  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < norm.edge_count(); ++e) {
    if (relevant[e]) candidates.push_back(e);
  }
  if (candidates.size() > size_limit) {
    throw Error(ErrorCode::SizeLimitExceeded, std::to_string(candidates.size()) +
                                                  " candidate edges exceed the exact solver limit of " +
                                                  std::to_string(size_limit));
  }

  // The bottleneck optimum restricted to candidates is the first incumbent.
  SolveReport bottleneck = solve_hamming_bottleneck(norm);
  if (bottleneck.status == Status::Infeasible) {
    report.status = Status::Infeasible;
    report.violating_leaves = std::move(bottleneck.violating_leaves);
    report.certificate = HammingTrace{};
    return report;
  }
  std::vector<EdgeId> best;
  for (EdgeId e : std::get<HammingTrace>(bottleneck.certificate).selection) {
    if (relevant[e]) best.push_back(e);
  }
  Rational best_cost = 0;
  for (EdgeId e : best) best_cost += norm.cost[e];

  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](EdgeId x, EdgeId y) { return norm.cost[x] > norm.cost[y]; });
  const std::size_t k = candidates.size();

  struct Node {
    std::size_t depth;
    std::vector<char> take;  // decisions for candidates[0, depth)
    Rational spent;
  };
  std::vector<Node> stack;
  stack.push_back({0, {}, Rational(0)});
  std::size_t explored = 0;
  std::vector<Rational> amounts = zeros(norm.edge_count());

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    ++explored;
    if (node.spent > best_cost) continue;

    // Optimistic completion: every undecided candidate saturated.
    std::fill(amounts.begin(), amounts.end(), Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
      if (i >= node.depth || node.take[i]) amounts[candidates[i]] = norm.bound[candidates[i]];
    }
    if (!is_feasible(norm, ModificationPlan{amounts})) continue;

    if (node.depth == k) {
      std::vector<EdgeId> chosen;
      for (std::size_t i = 0; i < k; ++i) {
        if (node.take[i]) chosen.push_back(candidates[i]);
      }
      std::sort(chosen.begin(), chosen.end());
      if (node.spent < best_cost || selection_less(chosen, best)) {
        best = std::move(chosen);
        best_cost = node.spent;
      }
      continue;
    }
    Node with = node;
    with.take.push_back(1);
    with.spent += norm.cost[candidates[node.depth]];
    ++with.depth;
    node.take.push_back(0);
    ++node.depth;
    stack.push_back(std::move(with));
    stack.push_back(std::move(node));  // explore "leave out" first
  }

  HammingTrace trace;
  trace.selection = best;
  trace.nodes_explored = explored;
  trace.threshold = best_cost;
  report.status = Status::Optimal;
  report.plan = selection_plan(norm, best);
  report.cost = plan_cost(Objective::HammingSum, norm.cost, report.plan);
  report.certificate = std::move(trace);
  return report;
}

}  // namespace invmaxian
