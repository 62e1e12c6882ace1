#include "invmaxian/simplex.hpp"

#include <string>

#include "invmaxian/error.hpp"

namespace invmaxian {

namespace {

enum class VarState : unsigned char { Basic, AtLower, AtUpper };

// Columns: [0, n) structural, [n, n+m) surplus, then one artificial per row
// whose right-hand side is positive. Rows with rhs <= 0 are negated so that
// their surplus column starts basic.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : n_(p.var_count()), m_(p.rows.size()) {
    for (const auto& row : p.rows) {
      if (sgn(row.rhs) > 0) ++artificials_;
    }
    cols_ = n_ + m_ + artificials_;
    cells_.assign(m_ * cols_, Rational(0));
    beta_.resize(m_);
    basis_.resize(m_);
    state_.assign(cols_, VarState::AtLower);
    upper_.resize(cols_);
    for (std::size_t j = 0; j < n_; ++j) upper_[j] = p.upper[j];

    std::size_t next_art = n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& row = p.rows[i];
      const bool positive = sgn(row.rhs) > 0;
      const int scale = positive ? 1 : -1;
      for (const auto& [j, coef] : row.terms) {
        if (j >= n_) throw Error(ErrorCode::DimensionMismatch, "row references variable " + std::to_string(j));
        at(i, j) += scale * coef;
      }
      at(i, n_ + i) = -scale;
      if (positive) {
        at(i, next_art) = 1;
        basis_[i] = next_art++;
        beta_[i] = row.rhs;
      } else {
        basis_[i] = n_ + i;
        beta_[i] = -row.rhs;
      }
      state_[basis_[i]] = VarState::Basic;
    }
  }

  // Returns false when the phase objective is unbounded below.
  bool optimize(const std::vector<Rational>& cost, std::size_t& iterations) {
    reduced_.assign(cols_, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      Rational d = cost[j];
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(cost[basis_[i]]) != 0 && sgn(at(i, j)) != 0) d -= cost[basis_[i]] * at(i, j);
      }
      reduced_[j] = d;
    }
    const std::size_t cap = 200000 + 100 * (m_ + cols_);
    for (;;) {
      if (++iterations > cap) throw Error(ErrorCode::Internal, "simplex iteration cap reached");
      const auto entering = choose_entering();
      if (!entering) return true;
      if (!step(*entering)) return false;
    }
  }

  void fix_artificials() {
    for (std::size_t j = n_ + m_; j < cols_; ++j) upper_[j] = Rational(0);
  }

  [[nodiscard]] Rational artificial_sum() const {
    Rational total = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_ + m_) total += beta_[i];
    }
    return total;
  }

  [[nodiscard]] std::vector<Rational> values() const {
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      if (state_[j] == VarState::AtUpper) x[j] = *upper_[j];
    }
    for (std::size_t i = 0; i < m_; ++i) x[basis_[i]] = beta_[i];
    return x;
  }

  [[nodiscard]] const Rational& reduced(std::size_t j) const { return reduced_[j]; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

 private:
  Rational& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  [[nodiscard]] const Rational& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  [[nodiscard]] bool fixed(std::size_t j) const { return upper_[j] && sgn(*upper_[j]) == 0; }

  [[nodiscard]] std::optional<std::size_t> choose_entering() const {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (state_[j] == VarState::Basic || fixed(j)) continue;
      const int s = sgn(reduced_[j]);
      if ((state_[j] == VarState::AtLower && s < 0) || (state_[j] == VarState::AtUpper && s > 0)) return j;
    }
    return std::nullopt;
  }

  bool step(std::size_t j) {
    const int dir = state_[j] == VarState::AtLower ? 1 : -1;
    std::optional<Rational> best;
    std::size_t leave_row = m_;
    VarState leave_to = VarState::AtLower;
    for (std::size_t i = 0; i < m_; ++i) {
      const int s = sgn(at(i, j)) * dir;  // basic var moves by -s * theta
      if (s == 0) continue;
      Rational limit;
      VarState target;
      if (s > 0) {
        limit = beta_[i] / abs(at(i, j));
        target = VarState::AtLower;
      } else {
        const auto& ub = upper_[basis_[i]];
        if (!ub) continue;
        limit = (*ub - beta_[i]) / abs(at(i, j));
        target = VarState::AtUpper;
      }
      if (!best || limit < *best || (limit == *best && basis_[i] < basis_[leave_row])) {
        best = limit;
        leave_row = i;
        leave_to = target;
      }
    }
    const bool can_flip = upper_[j].has_value();
    if (!best && !can_flip) return false;

    if (can_flip && (!best || *upper_[j] <= *best)) {
      const Rational theta = *upper_[j];
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(at(i, j)) != 0) beta_[i] -= dir * theta * at(i, j);
      }
      state_[j] = dir > 0 ? VarState::AtUpper : VarState::AtLower;
      return true;
    }

    const Rational theta = *best;
    for (std::size_t i = 0; i < m_; ++i) {
      if (sgn(at(i, j)) != 0) beta_[i] -= dir * theta * at(i, j);
    }
    const Rational start = state_[j] == VarState::AtLower ? Rational(0) : *upper_[j];
    const std::size_t leaving = basis_[leave_row];
    state_[leaving] = leave_to;
    basis_[leave_row] = j;
    state_[j] = VarState::Basic;
    beta_[leave_row] = start + dir * theta;
    pivot(leave_row, j);
    return true;
  }

  void pivot(std::size_t r, std::size_t j) {
    const Rational inv = 1 / at(r, j);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(at(r, k)) != 0) at(r, k) *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(at(i, j)) == 0) continue;
      const Rational factor = at(i, j);
      for (std::size_t k = 0; k < cols_; ++k) {
        if (sgn(at(r, k)) != 0) at(i, k) -= factor * at(r, k);
      }
    }
    if (sgn(reduced_[j]) != 0) {
      const Rational factor = reduced_[j];
      for (std::size_t k = 0; k < cols_; ++k) {
        if (sgn(at(r, k)) != 0) reduced_[k] -= factor * at(r, k);
      }
    }
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t artificials_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> cells_;
  std::vector<Rational> beta_;
  std::vector<std::size_t> basis_;
  std::vector<VarState> state_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<Rational> reduced_;
};

}  // namespace

LpResult solve_lp(const LpProblem& problem) {
  const std::size_t n = problem.var_count();
  if (problem.upper.size() != n) throw Error(ErrorCode::DimensionMismatch, "bound vector does not match cost vector");
  for (std::size_t j = 0; j < n; ++j) {
    if (problem.upper[j] && sgn(*problem.upper[j]) < 0) {
      LpResult r;
      r.status = LpStatus::Infeasible;
      return r;
    }
  }
  const std::size_t m = problem.rows.size();
  Tableau tab(problem);
  LpResult result;

  std::vector<Rational> phase_cost(tab.cols(), Rational(0));
  for (std::size_t j = n + m; j < tab.cols(); ++j) phase_cost[j] = 1;
  tab.optimize(phase_cost, result.iterations);
  if (sgn(tab.artificial_sum()) > 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  tab.fix_artificials();

  std::fill(phase_cost.begin(), phase_cost.end(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase_cost[j] = problem.cost[j];
  if (!tab.optimize(phase_cost, result.iterations)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  auto& cert = result.certificate;
  const auto x = tab.values();
  cert.primal.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
  cert.row_duals.resize(m);
  for (std::size_t i = 0; i < m; ++i) cert.row_duals[i] = tab.reduced(n + i);
  cert.bound_duals.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (problem.upper[j] && sgn(tab.reduced(j)) < 0) cert.bound_duals[j] = -tab.reduced(j);
  }
  cert.primal_objective = 0;
  for (std::size_t j = 0; j < n; ++j) cert.primal_objective += problem.cost[j] * cert.primal[j];
  cert.dual_objective = 0;
  for (std::size_t i = 0; i < m; ++i) cert.dual_objective += problem.rows[i].rhs * cert.row_duals[i];
  for (std::size_t j = 0; j < n; ++j) {
    if (problem.upper[j]) cert.dual_objective -= *problem.upper[j] * cert.bound_duals[j];
  }
  return result;
}

CertificateCheck check_certificate(const LpProblem& problem, const LpCertificate& cert) {
  CertificateCheck check;
  auto fail = [&](std::string why) {
    check.ok = false;
    check.reasons.push_back(std::move(why));
  };
  const std::size_t n = problem.var_count();
  const std::size_t m = problem.rows.size();
  if (cert.primal.size() != n || cert.bound_duals.size() != n || cert.row_duals.size() != m) {
    fail("certificate dimensions do not match the problem");
    return check;
  }

  Rational primal_obj = 0;
  for (std::size_t j = 0; j < n; ++j) {
    primal_obj += problem.cost[j] * cert.primal[j];
    if (sgn(cert.primal[j]) < 0) fail("x[" + std::to_string(j) + "] < 0");
    if (problem.upper[j] && cert.primal[j] > *problem.upper[j]) fail("x[" + std::to_string(j) + "] above its bound");
    if (sgn(cert.bound_duals[j]) < 0) fail("z[" + std::to_string(j) + "] < 0");
    if (!problem.upper[j] && sgn(cert.bound_duals[j]) != 0) fail("z[" + std::to_string(j) + "] on an unbounded variable");
  }

  std::vector<Rational> column_dual(n, Rational(0));  // (A^T y)_j
  Rational dual_obj = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = problem.rows[i];
    Rational activity = 0;
    for (const auto& [j, coef] : row.terms) {
      activity += coef * cert.primal[j];
      column_dual[j] += coef * cert.row_duals[i];
    }
    if (activity < row.rhs) fail("row " + std::to_string(i) + " violated");
    if (sgn(cert.row_duals[i]) < 0) fail("y[" + std::to_string(i) + "] < 0");
    if (sgn(cert.row_duals[i] * (activity - row.rhs)) != 0) fail("slackness fails on row " + std::to_string(i));
    dual_obj += row.rhs * cert.row_duals[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Rational slack = problem.cost[j] - column_dual[j] + cert.bound_duals[j];
    if (sgn(slack) < 0) fail("dual constraint " + std::to_string(j) + " violated");
    if (sgn(slack * cert.primal[j]) != 0) fail("slackness fails on reduced cost " + std::to_string(j));
    if (problem.upper[j]) {
      dual_obj -= *problem.upper[j] * cert.bound_duals[j];
      if (sgn(cert.bound_duals[j] * (*problem.upper[j] - cert.primal[j])) != 0) {
        fail("slackness fails on bound " + std::to_string(j));
      }
    }
  }
  if (primal_obj != cert.primal_objective) fail("stated primal objective is wrong");
  if (dual_obj != cert.dual_objective) fail("stated dual objective is wrong");
  if (primal_obj != dual_obj) fail("primal and dual objectives differ");
  return check;
}

}  // namespace invmaxian
