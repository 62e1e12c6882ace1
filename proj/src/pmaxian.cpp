#include "invmaxian/pmaxian.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <utility>

#include "invmaxian/cheb.hpp"
#include "invmaxian/error.hpp"
#include "invmaxian/hamming.hpp"
#include "invmaxian/lp_l1.hpp"

namespace invmaxian {

SolveReport solve_pair(const InverseInstance& inst, VertexId a, VertexId b, const SolveOptions& options) {
  const NormalizedInstance norm = normalize(inst, a, b);
  switch (inst.objective) {
    case Objective::L1: return solve_l1(norm);
    case Objective::Chebyshev: return solve_chebyshev(norm);
    case Objective::HammingBottleneck: return solve_hamming_bottleneck(norm);
    case Objective::HammingSum: return solve_hamming_sum_exact(norm, options.hamming_sum_limit);
  }
  throw Error(ErrorCode::Internal, "unknown objective");
}

SolveReport solve_inverse_pmaxian(const InverseInstance& inst, const SolveOptions& options) {
  inst.validate();
  std::vector<VertexId> targets = inst.targets;
  std::sort(targets.begin(), targets.end());
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (std::size_t j = i + 1; j < targets.size(); ++j) pairs.emplace_back(targets[i], targets[j]);
  }

  std::vector<SolveReport> results;
  results.reserve(pairs.size());
  if (options.parallel && pairs.size() > 1) {
    std::vector<std::future<SolveReport>> pending;
    pending.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      pending.push_back(std::async(std::launch::async, [&inst, &options, a = a, b = b] {
        return solve_pair(inst, a, b, options);
      }));
    }
    for (auto& f : pending) results.push_back(f.get());
  } else {
    for (const auto& [a, b] : pairs) results.push_back(solve_pair(inst, a, b, options));
  }

  std::vector<PairOutcome> outcomes;
  std::size_t best = results.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    outcomes.push_back({r.a, r.b, r.status, r.cost});
    if (r.status != Status::Optimal) continue;
    if (best == results.size() || r.cost < results[best].cost) best = i;
  }
  if (best == results.size()) {
    std::vector<VertexId> leaves;
    for (const auto& r : results) leaves.insert(leaves.end(), r.violating_leaves.begin(), r.violating_leaves.end());
    std::sort(leaves.begin(), leaves.end());
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    SolveReport report = std::move(results.front());
    report.violating_leaves = std::move(leaves);
    report.pairs = std::move(outcomes);
    return report;
  }
  SolveReport report = std::move(results[best]);
  report.pairs = std::move(outcomes);
  return report;
}

Verification verify_solution(const InverseInstance& inst, const SolveReport& report) {
  Verification v;
  auto fail = [&](std::string why) {
    v.ok = false;
    v.reasons.push_back(std::move(why));
  };
  if (report.status != Status::Optimal) {
    fail("report is not OPTIMAL");
    return v;
  }
  const std::size_t m = inst.tree.edge_count();
  if (report.plan.amount.size() != m) {
    fail("plan has " + std::to_string(report.plan.amount.size()) + " entries for " + std::to_string(m) + " edges");
    return v;
  }
  const auto& targets = inst.targets;
  auto is_target = [&](VertexId x) { return std::find(targets.begin(), targets.end(), x) != targets.end(); };
  if (report.a == report.b || !is_target(report.a) || !is_target(report.b)) {
    fail("winning pair is not a pair of distinct targets");
    return v;
  }

  // Signs are re-derived from the tree, not taken from the report.
  const PathQuery ab = path(inst.tree, report.a, report.b);
  std::vector<char> on_path(m, 0);
  for (EdgeId e : ab.edges) on_path[e] = 1;

  std::vector<Rational> lengths(m);
  bool bounds_ok = true;
  bool lengths_ok = true;
  for (EdgeId e = 0; e < m; ++e) {
    const Rational& x = report.plan.amount[e];
    const Rational& len = inst.tree.edge(e).length;
    const Rational& limit = on_path[e] ? inst.inc_bound[e] : inst.dec_bound[e];
    if (sgn(x) < 0 || x > limit) bounds_ok = false;
    lengths[e] = on_path[e] ? Rational(len + x) : Rational(len - x);
    if (sgn(lengths[e]) < 0) {
      lengths_ok = false;
      fail("edge " + inst.edge_name(e) + " gets a negative length");
    }
  }
  if (!bounds_ok) fail("bound violated");
  if (plan_cost(report.objective, inst.cost, report.plan) != report.cost) fail("cost mismatch");
  if (!lengths_ok) return v;

  const Tree modified = inst.tree.with_lengths(lengths);
  if (!modified.is_leaf(report.a) || !modified.is_leaf(report.b)) {
    fail("winning pair is not a pair of leaves");
  } else if (!is_weakly_longest(modified, report.a, report.b).holds) {
    fail("P(a,b) is not a longest path after modification");
  }
  return v;
}

}  // namespace invmaxian
