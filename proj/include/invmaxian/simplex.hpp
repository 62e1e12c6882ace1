#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invmaxian/rational.hpp"
#include "invmaxian/report.hpp"

namespace invmaxian {

/// min c.x  s.t.  sum_j a_rj x_j >= rhs_r  (every row),  0 <= x_j <= upper_j.
/// An upper bound of nullopt means unbounded above.
struct LpProblem {
  struct Row {
    std::vector<std::pair<std::size_t, Rational>> terms;
    Rational rhs;
  };
  std::vector<Rational> cost;
  std::vector<std::optional<Rational>> upper;
  std::vector<Row> rows;

  [[nodiscard]] std::size_t var_count() const noexcept { return cost.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  LpCertificate certificate;  // meaningful when Optimal
  std::size_t iterations = 0;
};

/// Two-phase bounded-variable primal simplex on a dense rational tableau.
/// Bland's rule for entering and leaving variables, so it always terminates
/// and the result is deterministic.
[[nodiscard]] LpResult solve_lp(const LpProblem& problem);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> reasons;
};

/// Re-verifies primal feasibility, dual feasibility, complementary
/// slackness and equality of the two objectives from scratch.
[[nodiscard]] CertificateCheck check_certificate(const LpProblem& problem, const LpCertificate& cert);

}  // namespace invmaxian
