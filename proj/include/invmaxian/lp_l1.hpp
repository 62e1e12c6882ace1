#pragma once

#include <iosfwd>
#include <vector>

#include "invmaxian/instance.hpp"
#include "invmaxian/report.hpp"
#include "invmaxian/simplex.hpp"

namespace invmaxian {

/// The l1 subproblem as an LP: one variable per edge with bounds [0, bound_e],
/// one >= row per gap row (rows with rhs <= 0 included, indices preserved).
[[nodiscard]] LpProblem make_l1_lp(const NormalizedInstance& norm);

/// Exact l1 optimum with a duality certificate, or Infeasible with the
/// leaves that stay violated under the saturated plan.
[[nodiscard]] SolveReport solve_l1(const NormalizedInstance& norm);

/// Writes the LP in CPLEX LP text format. Rationals without a terminating
/// decimal expansion are rounded to 17 fractional digits, and a comment
/// says so.
void write_lp_format(std::ostream& out, const InverseInstance& inst, const NormalizedInstance& norm);

/// f(z) = offset + slope * z + sum_k kinks[k].slope_change * max(0, z - kinks[k].position)
struct ConvexPwl {
  struct Kink {
    Rational position;
    Rational slope_change;  // >= 0
  };
  Rational offset;
  Rational slope;
  std::vector<Kink> kinks;

  [[nodiscard]] Rational operator()(const Rational& z) const;
};

struct PwlMinimum {
  Rational argmin;
  Rational value;
};

/// Leftmost minimizer of a convex piecewise-linear function over [lo, hi].
/// Sorts the kinks and scans until the right derivative turns nonnegative.
[[nodiscard]] PwlMinimum minimize_pwl_convex(const ConvexPwl& f, const Rational& lo, const Rational& hi);

/// Two-case l1 solver for a star (one centre, all other vertices leaves).
/// `a` and `b` must be distinct target leaves. Returns the cheaper feasible
/// case; the full per-case detail is in the StarReport certificate.
[[nodiscard]] SolveReport solve_star_l1(const InverseInstance& inst, VertexId a, VertexId b);

/// Centre of a star, or nullopt when the tree is not a star with >= 3 vertices.
[[nodiscard]] std::optional<VertexId> star_center(const Tree& tree);

}  // namespace invmaxian
