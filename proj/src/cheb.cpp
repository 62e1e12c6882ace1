#include "invmaxian/cheb.hpp"

#include <algorithm>
#include <string>

#include "invmaxian/error.hpp"

namespace invmaxian {

ModificationPlan apply_valid_modification(const NormalizedInstance& norm, const Rational& budget) {
  ModificationPlan plan;
  plan.amount.resize(norm.edge_count());
  for (EdgeId e = 0; e < norm.edge_count(); ++e) {
    const Rational& c = norm.cost[e];
    if (sgn(c) == 0 || c * norm.bound[e] <= budget) {
      plan.amount[e] = norm.bound[e];
    } else {
      plan.amount[e] = budget / c;
    }
  }
  return plan;
}

std::vector<Rational> breakpoint_ladder(const NormalizedInstance& norm) {
  std::vector<Rational> ladder;
  for (EdgeId e = 0; e < norm.edge_count(); ++e) {
    Rational v = norm.cost[e] * norm.bound[e];
    if (sgn(v) > 0) ladder.push_back(std::move(v));
  }
  std::sort(ladder.begin(), ladder.end());
  ladder.erase(std::unique(ladder.begin(), ladder.end()), ladder.end());
  return ladder;
}

namespace {

Bracket bracket_from(const NormalizedInstance& norm, const std::vector<Rational>& ladder, std::size_t index) {
  Bracket br;
  br.index = index;
  br.lo = index <= 1 ? Rational(0) : ladder[index - 2];
  br.hi = index == 0 ? Rational(0) : ladder[index - 1];
  br.plan = apply_valid_modification(norm, br.hi);
  return br;
}

}  // namespace

std::optional<Bracket> phase1_bracket(const NormalizedInstance& norm) {
  const auto ladder = breakpoint_ladder(norm);
  auto feasible_at = [&](const Rational& c) { return is_feasible(norm, apply_valid_modification(norm, c)); };
  if (feasible_at(Rational(0))) return bracket_from(norm, ladder, 0);
  if (ladder.empty() || !feasible_at(ladder.back())) return std::nullopt;
  // invariant: ladder[lo-1] infeasible (or lo == 0), ladder[hi-1] feasible; 1-based
  std::size_t lo = 0;
  std::size_t hi = ladder.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible_at(ladder[mid - 1])) hi = mid;
    else lo = mid;
  }
  return bracket_from(norm, ladder, hi);
}

ThresholdTrace phase2_threshold(const NormalizedInstance& norm, const Rational& lo, const Rational& hi) {
  const std::size_t m = norm.edge_count();
  std::vector<Rational> frozen(m, Rational(0));  // contribution independent of C
  std::vector<Rational> rate(m, Rational(0));    // d x_e / d C
  for (EdgeId e = 0; e < m; ++e) {
    const Rational& c = norm.cost[e];
    if (sgn(c) == 0 || c * norm.bound[e] <= lo) frozen[e] = norm.bound[e];
    else rate[e] = 1 / c;
  }
  const auto base = norm.row_sums(frozen);
  const auto slope = norm.row_sums(rate);

  ThresholdTrace trace;
  trace.bracket_lo = lo;
  trace.bracket_hi = hi;
  trace.budget = lo;
  bool any = false;
  for (std::size_t r = 0; r < norm.rows.size(); ++r) {
    const Rational& rhs = norm.rows[r].rhs;
    if (base[r] + slope[r] * lo >= rhs) continue;
    if (sgn(slope[r]) == 0) {
      throw Error(ErrorCode::Internal, "row " + std::to_string(r) + " cannot be satisfied inside the bracket");
    }
    Rational t = (rhs - base[r]) / slope[r];
    if (!any || t > trace.budget) {
      trace.budget = t;
      trace.tight_row = r;
    }
    any = true;
    trace.thresholds.push_back({r, std::move(t)});
  }
  if (!any) throw Error(ErrorCode::Internal, "no row is violated at the lower end of the bracket");
  if (trace.budget > hi) throw Error(ErrorCode::Internal, "threshold lies above the bracket");
  return trace;
}

SolveReport solve_chebyshev(const NormalizedInstance& norm) {
  SolveReport report;
  report.objective = Objective::Chebyshev;
  report.a = norm.a;
  report.b = norm.b;
  report.sign = norm.sign;

  const auto bracket = phase1_bracket(norm);
  if (!bracket) {
    report.status = Status::Infeasible;
    report.violating_leaves = violating_leaves(norm, saturated_plan(norm));
    ThresholdTrace trace;
    trace.ladder = breakpoint_ladder(norm);
    report.certificate = std::move(trace);
    return report;
  }
  ThresholdTrace trace;
  if (bracket->index == 0) {
    trace.budget = 0;
  } else {
    trace = phase2_threshold(norm, bracket->lo, bracket->hi);
    trace.bracket_index = bracket->index;
  }
  trace.ladder = breakpoint_ladder(norm);
  report.status = Status::Optimal;
  report.plan = apply_valid_modification(norm, trace.budget);
  report.cost = plan_cost(Objective::Chebyshev, norm.cost, report.plan);
  if (report.cost != trace.budget) throw Error(ErrorCode::Internal, "valid modification cost differs from budget");
  report.certificate = std::move(trace);
  return report;
}

}  // namespace invmaxian
