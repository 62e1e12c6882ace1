#include "invmaxian/oracle.hpp"

#include <algorithm>
#include <string>

#include "invmaxian/cheb.hpp"
#include "invmaxian/error.hpp"

namespace invmaxian::oracle {

std::vector<std::vector<Rational>> all_pair_distances(const Tree& tree) {
  const std::size_t n = tree.vertex_count();
  std::vector<std::vector<std::optional<Rational>>> d(n, std::vector<std::optional<Rational>>(n));
  for (VertexId v = 0; v < n; ++v) d[v][v] = Rational(0);
  for (const auto& e : tree.edges()) {
    d[e.u][e.v] = e.length;
    d[e.v][e.u] = e.length;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        Rational via = *d[i][k] + *d[k][j];
        if (!d[i][j] || via < *d[i][j]) d[i][j] = std::move(via);
      }
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = *d[i][j];
  }
  return out;
}

Rational maxian_value(const Tree& tree, const std::vector<std::vector<Rational>>& dist,
                      const std::vector<VertexId>& centers) {
  Rational total = 0;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    Rational far = 0;
    for (VertexId c : centers) far = std::max(far, dist[v][c]);
    total += tree.weight(v) * far;
  }
  return total;
}

MaxianResult maxian(const Tree& tree, std::size_t p) {
  const std::size_t n = tree.vertex_count();
  if (n > 50) throw Error(ErrorCode::SizeLimitExceeded, "maxian oracle is limited to 50 vertices");
  if (p < 1 || p > 3 || p > n) throw Error(ErrorCode::SizeLimitExceeded, "maxian oracle needs 1 <= p <= min(3, n)");
  const auto dist = all_pair_distances(tree);

  MaxianResult result;
  bool first = true;
  std::vector<VertexId> set(p);
  for (std::size_t i = 0; i < p; ++i) set[i] = i;
  for (;;) {
    Rational value = maxian_value(tree, dist, set);
    if (first || value > result.value) {
      result.value = value;
      result.best = set;
      result.optimal_sets.assign(1, set);
      first = false;
    } else if (value == result.value) {
      result.optimal_sets.push_back(set);
    }
    // next combination in lexicographic order
    std::size_t i = p;
    while (i > 0 && set[i - 1] == n - p + (i - 1)) --i;
    if (i == 0) break;
    ++set[i - 1];
    for (std::size_t j = i; j < p; ++j) set[j] = set[j - 1] + 1;
  }
  return result;
}

namespace {

// Explicit per-row left-hand side under the valid modification with budget C.
Rational row_value(const NormalizedInstance& norm, const std::vector<EdgeId>& support, const Rational& c) {
  Rational total = 0;
  for (EdgeId e : support) {
    const Rational& ce = norm.cost[e];
    if (sgn(ce) == 0 || ce * norm.bound[e] <= c) total += norm.bound[e];
    else total += c / ce;
  }
  return total;
}

// Crossing of the row's affine piece that is active just left of `at`
// (or right of it when `right` is set).
std::optional<Rational> affine_crossing(const NormalizedInstance& norm, const std::vector<EdgeId>& support,
                                        const Rational& rhs, const Rational& at, bool right) {
  Rational fixed = 0;
  Rational slope = 0;
  for (EdgeId e : support) {
    const Rational& ce = norm.cost[e];
    const Rational cap = ce * norm.bound[e];
    const bool capped = sgn(ce) == 0 || (right ? cap <= at : cap < at);
    if (capped) fixed += norm.bound[e];
    else slope += 1 / ce;
  }
  if (sgn(slope) == 0) return std::nullopt;
  return (rhs - fixed) / slope;
}

}  // namespace

std::optional<Rational> chebyshev(const NormalizedInstance& norm) {
  auto feasible_at = [&](const Rational& c) { return is_feasible(norm, apply_valid_modification(norm, c)); };
  if (feasible_at(Rational(0))) return Rational(0);
  Rational hi = 0;
  for (EdgeId e = 0; e < norm.edge_count(); ++e) hi = std::max(hi, Rational(norm.cost[e] * norm.bound[e]));
  if (!feasible_at(hi)) return std::nullopt;

  Rational lo = 0;
  const Rational width(1, mpz_class(1) << 40);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (feasible_at(mid)) hi = mid;
    else lo = mid;
  }

  // Rows still violated at lo cross inside (lo, hi]; the largest crossing wins.
  std::optional<Rational> best;
  for (const auto& row : norm.rows) {
    const auto support = norm.support(row);
    if (row_value(norm, support, lo) >= row.rhs) continue;
    std::optional<Rational> crossing;
    for (bool right : {false, true}) {
      auto t = affine_crossing(norm, support, row.rhs, right ? lo : hi, right);
      if (t && *t > lo && *t <= hi && row_value(norm, support, *t) == row.rhs) {
        crossing = t;
        break;
      }
    }
    if (!crossing) {
      // Several kinks inside the final interval: scan every kink of this row.
      std::vector<Rational> kinks{lo, hi};
      for (EdgeId e : support) {
        Rational cap = norm.cost[e] * norm.bound[e];
        if (cap > lo && cap < hi) kinks.push_back(cap);
      }
      std::sort(kinks.begin(), kinks.end());
      for (std::size_t k = 0; k + 1 < kinks.size() && !crossing; ++k) {
        auto t = affine_crossing(norm, support, row.rhs, kinks[k], true);
        if (t && *t >= kinks[k] && *t <= kinks[k + 1] && row_value(norm, support, *t) == row.rhs) crossing = t;
      }
    }
    if (!crossing) throw Error(ErrorCode::Internal, "bisection oracle could not snap a crossing");
    if (!best || *crossing > *best) best = crossing;
  }
  if (!best || !feasible_at(*best)) throw Error(ErrorCode::Internal, "bisection oracle snapped to an infeasible budget");
  return best;
}

std::optional<Rational> l1_integer(const NormalizedInstance& norm) {
  const std::size_t m = norm.edge_count();
  std::vector<long> top(m);
  double grid = 1;
  for (EdgeId e = 0; e < m; ++e) {
    if (norm.bound[e].get_den() != 1) throw Error(ErrorCode::InvalidInstance, "integer oracle needs integer bounds");
    if (!norm.bound[e].get_num().fits_slong_p()) throw Error(ErrorCode::SizeLimitExceeded, "bound too large");
    top[e] = norm.bound[e].get_num().get_si();
    grid *= static_cast<double>(top[e] + 1);
  }
  if (grid > 1e6) throw Error(ErrorCode::SizeLimitExceeded, "integer grid exceeds 10^6 plans");

  std::vector<long> x(m, 0);
  ModificationPlan plan{zeros(m)};
  std::optional<Rational> best;
  for (;;) {
    for (EdgeId e = 0; e < m; ++e) plan.amount[e] = x[e];
    if (is_feasible(norm, plan)) {
      Rational c = plan_cost(Objective::L1, norm.cost, plan);
      if (!best || c < *best) best = c;
    }
    std::size_t e = 0;
    while (e < m && x[e] == top[e]) x[e++] = 0;
    if (e == m) break;
    ++x[e];
  }
  return best;
}

HammingResult hamming(const NormalizedInstance& norm, HammingVariant variant) {
  const std::size_t m = norm.edge_count();
  if (m > 20) throw Error(ErrorCode::SizeLimitExceeded, "Hamming oracle is limited to 20 edges");
  auto plan_for = [&](auto&& in_set) {
    ModificationPlan plan{zeros(m)};
    for (EdgeId e = 0; e < m; ++e) {
      if (in_set(e)) plan.amount[e] = norm.bound[e];
    }
    return plan;
  };

  HammingResult result;
  if (variant == HammingVariant::Bottleneck) {
    std::vector<Rational> thresholds{Rational(0)};
    thresholds.insert(thresholds.end(), norm.cost.begin(), norm.cost.end());
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    for (const auto& t : thresholds) {
      if (is_feasible(norm, plan_for([&](EdgeId e) { return norm.cost[e] <= t; }))) {
        result.cost = t;
        for (EdgeId e = 0; e < m; ++e) {
          if (norm.cost[e] <= t && sgn(norm.bound[e]) > 0) result.selection.push_back(e);
        }
        break;
      }
    }
    return result;
  }

  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    auto in_mask = [&](EdgeId e) { return ((mask >> e) & 1U) != 0; };
    Rational c = 0;
    std::vector<EdgeId> set;
    for (EdgeId e = 0; e < m; ++e) {
      if (in_mask(e)) {
        c += norm.cost[e];
        set.push_back(e);
      }
    }
    if (result.cost && c > *result.cost) continue;
    if (!is_feasible(norm, plan_for(in_mask))) continue;
    bool better = !result.cost || c < *result.cost;
    if (!better) {
      // indicator order: the first differing edge must be absent from `set`
      for (EdgeId e = 0; e < m; ++e) {
        const bool mine = in_mask(e);
        const bool theirs = std::binary_search(result.selection.begin(), result.selection.end(), e);
        if (mine != theirs) {
          better = !mine;
          break;
        }
      }
    }
    if (better) {
      result.cost = c;
      result.selection = std::move(set);
    }
  }
  return result;
}

}  // namespace invmaxian::oracle
