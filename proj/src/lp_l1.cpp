#include "invmaxian/lp_l1.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "invmaxian/error.hpp"

namespace invmaxian {

LpProblem make_l1_lp(const NormalizedInstance& norm) {
  LpProblem lp;
  lp.cost = norm.cost;
  lp.upper.reserve(norm.edge_count());
  for (const auto& u : norm.bound) lp.upper.emplace_back(u);
  lp.rows.reserve(norm.rows.size());
  for (const auto& row : norm.rows) {
    LpProblem::Row r;
    r.rhs = row.rhs;
    for (EdgeId e : norm.support(row)) r.terms.emplace_back(e, Rational(1));
    lp.rows.push_back(std::move(r));
  }
  return lp;
}

namespace {

SolveReport infeasible_report(const NormalizedInstance& norm, Objective objective) {
  SolveReport report;
  report.status = Status::Infeasible;
  report.objective = objective;
  report.a = norm.a;
  report.b = norm.b;
  report.sign = norm.sign;
  report.violating_leaves = violating_leaves(norm, saturated_plan(norm));
  return report;
}

}  // namespace

SolveReport solve_l1(const NormalizedInstance& norm) {
  if (norm.cost.size() != norm.edge_count() || norm.bound.size() != norm.edge_count()) {
    throw Error(ErrorCode::DimensionMismatch, "normalized instance has inconsistent edge data");
  }
  const LpProblem lp = make_l1_lp(norm);
  LpResult result = solve_lp(lp);
  if (result.status == LpStatus::Infeasible) return infeasible_report(norm, Objective::L1);
  if (result.status != LpStatus::Optimal) throw Error(ErrorCode::Internal, "l1 LP reported unbounded");

  SolveReport report;
  report.status = Status::Optimal;
  report.objective = Objective::L1;
  report.a = norm.a;
  report.b = norm.b;
  report.sign = norm.sign;
  report.plan.amount = result.certificate.primal;
  report.cost = result.certificate.primal_objective;
  report.certificate = std::move(result.certificate);
  return report;
}

namespace {

std::string lp_number(const Rational& r) {
  if (has_finite_decimal(r)) {
    int digits = 0;
    mpz_class den = r.get_den();
    while (den != 1) {
      // den only has factors 2 and 5 here
      if (mpz_divisible_ui_p(den.get_mpz_t(), 10) != 0) den /= 10;
      else if (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) den /= 2;
      else den /= 5;
      ++digits;
    }
    return to_decimal(r, digits);
  }
  return to_decimal(r, 17);
}

bool all_exact(const NormalizedInstance& norm) {
  auto exact = [](const Rational& r) { return has_finite_decimal(r); };
  return std::all_of(norm.cost.begin(), norm.cost.end(), exact) &&
         std::all_of(norm.bound.begin(), norm.bound.end(), exact) &&
         std::all_of(norm.rows.begin(), norm.rows.end(), [&](const GapRow& r) { return exact(r.rhs); });
}

}  // namespace

void write_lp_format(std::ostream& out, const InverseInstance& inst, const NormalizedInstance& norm) {
  out << "\\ inverse 2-maxian subproblem, l1 cost, pair (" << inst.vertex_name(norm.a) << ", "
      << inst.vertex_name(norm.b) << ")\n";
  if (!all_exact(norm)) out << "\\ some coefficients are rounded to 17 decimals\n";
  for (EdgeId e = 0; e < norm.edge_count(); ++e) {
    out << "\\ x" << e << " = " << (norm.sign[e] > 0 ? "increase" : "decrease") << " of edge "
        << inst.edge_name(e) << "\n";
  }
  out << "Minimize\n obj:";
  bool first = true;
  for (EdgeId e = 0; e < norm.edge_count(); ++e) {
    if (sgn(norm.cost[e]) == 0) continue;
    out << (first ? " " : " + ") << lp_number(norm.cost[e]) << " x" << e;
    first = false;
  }
  if (first) out << " 0 x0";
  out << "\nSubject To\n";
  for (std::size_t r = 0; r < norm.rows.size(); ++r) {
    const auto& row = norm.rows[r];
    const auto support = norm.support(row);
    out << " r" << r << "_" << (row.side == Side::A ? "a" : "b") << ":";
    if (support.empty()) {
      out << " 0 x0";
    } else {
      for (std::size_t k = 0; k < support.size(); ++k) out << (k == 0 ? " " : " + ") << "x" << support[k];
    }
    out << " >= " << lp_number(row.rhs) << "\n";
  }
  out << "Bounds\n";
  for (EdgeId e = 0; e < norm.edge_count(); ++e) out << " 0 <= x" << e << " <= " << lp_number(norm.bound[e]) << "\n";
  out << "End\n";
}

Rational ConvexPwl::operator()(const Rational& z) const {
  Rational value = offset + slope * z;
  for (const auto& k : kinks) {
    if (z > k.position) value += k.slope_change * (z - k.position);
  }
  return value;
}

PwlMinimum minimize_pwl_convex(const ConvexPwl& f, const Rational& lo, const Rational& hi) {
  if (lo > hi) throw Error(ErrorCode::EmptySet, "empty interval [" + to_string(lo) + ", " + to_string(hi) + "]");
  for (const auto& k : f.kinks) {
    if (sgn(k.slope_change) < 0) throw Error(ErrorCode::InvalidInstance, "negative slope change: not convex");
  }
  auto kinks = f.kinks;
  std::sort(kinks.begin(), kinks.end(), [](const auto& x, const auto& y) { return x.position < y.position; });

  Rational slope = f.slope;  // right derivative at z
  std::size_t k = 0;
  while (k < kinks.size() && kinks[k].position <= lo) slope += kinks[k++].slope_change;
  Rational z = lo;
  while (sgn(slope) < 0) {
    if (k == kinks.size() || kinks[k].position >= hi) {
      z = hi;
      break;
    }
    z = kinks[k].position;
    while (k < kinks.size() && kinks[k].position == z) slope += kinks[k++].slope_change;
  }
  return {z, f(z)};
}

std::optional<VertexId> star_center(const Tree& tree) {
  const std::size_t n = tree.vertex_count();
  if (n < 3) return std::nullopt;
  for (VertexId v = 0; v < n; ++v) {
    if (tree.degree(v) == n - 1) return v;
  }
  return std::nullopt;
}

namespace {

EdgeId leaf_edge(const Tree& tree, VertexId leaf) { return tree.neighbors(leaf).front().edge; }

struct StarData {
  EdgeId ea = 0;
  EdgeId eb = 0;
  Rational la, lb, xa, xb, ca, cb;
  std::vector<EdgeId> others;
};

// Shared tail of both cases: raise the target level to the largest forced
// lower bound, cut edges above the cap, then search f on [start, cap].
StarCaseResult run_case(StarCase which, const NormalizedInstance& norm, const StarData& s, Rational start,
                        Rational presolve_cost, std::vector<StarAdjustment> adjustments, const Rational& cap,
                        const Rational& level_cost) {
  StarCaseResult res;
  res.which = which;
  res.interval_hi = cap;

  std::optional<Rational> xi;
  for (EdgeId e : s.others) {
    if (norm.length[e] > start) {
      Rational floor_e = norm.length[e] - norm.bound[e];
      if (!xi || floor_e > *xi) xi = floor_e;
    }
  }
  if (xi && *xi > start) {
    presolve_cost += level_cost * (*xi - start);
    adjustments.push_back({s.ea, start, *xi});
    if (which == StarCase::AboveLongerTarget) adjustments.push_back({s.eb, start, *xi});
    start = *xi;
  }
  res.interval_lo = start;
  if (start > cap) {
    res.feasible = false;
    res.presolve = std::move(adjustments);
    return res;
  }

  ConvexPwl f;
  f.offset = -level_cost * start;
  f.slope = level_cost;
  for (EdgeId e : s.others) {
    Rational len = norm.length[e];
    if (len > cap) {
      presolve_cost += norm.cost[e] * (len - cap);
      adjustments.push_back({e, len, cap});
      len = cap;
    }
    // c (len - z)^+ = c (len - z) + c (z - len)^+
    f.offset += norm.cost[e] * len;
    f.slope -= norm.cost[e];
    f.kinks.push_back({len, norm.cost[e]});
  }
  const PwlMinimum best = minimize_pwl_convex(f, start, cap);
  res.feasible = true;
  res.level = best.argmin;
  res.presolve_cost = presolve_cost;
  res.search_cost = best.value;
  res.cost = presolve_cost + best.value;
  res.presolve = std::move(adjustments);
  return res;
}

}  // namespace

SolveReport solve_star_l1(const InverseInstance& inst, VertexId a, VertexId b) {
  if (!star_center(inst.tree)) throw Error(ErrorCode::InvalidInstance, "tree is not a star");
  const NormalizedInstance norm = normalize(inst, a, b);

  StarReport star;
  StarData s;
  s.ea = leaf_edge(inst.tree, a);
  s.eb = leaf_edge(inst.tree, b);
  if (norm.length[s.ea] > norm.length[s.eb]) {
    std::swap(s.ea, s.eb);
    star.swapped = true;
  }
  s.la = norm.length[s.ea];
  s.lb = norm.length[s.eb];
  s.xa = norm.bound[s.ea];
  s.xb = norm.bound[s.eb];
  s.ca = norm.cost[s.ea];
  s.cb = norm.cost[s.eb];
  for (EdgeId e = 0; e < norm.edge_count(); ++e) {
    if (e != s.ea && e != s.eb) s.others.push_back(e);
  }

  // Case 1: the shorter target edge ends in [l_a, l_b]; the longer one is untouched.
  star.case1 = run_case(StarCase::AtMostLongerTarget, norm, s, s.la, Rational(0), {},
                        std::min(s.lb, Rational(s.la + s.xa)), s.ca);

  // Case 2: both target edges end at a common level above l_b.
  if (s.lb - s.la > s.xa) {
    star.case2.which = StarCase::AboveLongerTarget;
    star.case2.feasible = false;
  } else {
    std::vector<StarAdjustment> raise;
    if (s.lb > s.la) raise.push_back({s.ea, s.la, s.lb});
    star.case2 = run_case(StarCase::AboveLongerTarget, norm, s, s.lb, s.ca * (s.lb - s.la), std::move(raise),
                          std::min(Rational(s.la + s.xa), Rational(s.lb + s.xb)), s.ca + s.cb);
  }

  const StarCaseResult* chosen = nullptr;
  if (star.case1.feasible) chosen = &star.case1;
  if (star.case2.feasible && (!chosen || star.case2.cost < chosen->cost)) chosen = &star.case2;
  if (!chosen) {
    SolveReport report = infeasible_report(norm, Objective::L1);
    report.certificate = std::move(star);
    return report;
  }
  star.chosen = chosen->which;

  SolveReport report;
  report.status = Status::Optimal;
  report.objective = Objective::L1;
  report.a = a;
  report.b = b;
  report.sign = norm.sign;
  report.plan.amount = zeros(norm.edge_count());
  const Rational& z = chosen->level;
  report.plan.amount[s.ea] = z - s.la;
  if (z > s.lb) report.plan.amount[s.eb] = z - s.lb;
  for (EdgeId e : s.others) {
    if (norm.length[e] > z) report.plan.amount[e] = norm.length[e] - z;
  }
  report.cost = chosen->cost;
  report.certificate = std::move(star);
  return report;
}

}  // namespace invmaxian
