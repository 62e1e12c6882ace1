#include <gtest/gtest.h>

#include "invmaxian/cheb.hpp"
#include "invmaxian/hamming.hpp"
#include "invmaxian/lp_l1.hpp"
#include "invmaxian/oracle.hpp"
#include "invmaxian/pmaxian.hpp"
#include "invmaxian/random_instance.hpp"

using namespace invmaxian;

namespace {

InverseInstance small(std::uint64_t seed, std::size_t n = 9, std::int64_t denominator = 1) {
  GeneratorOptions opt;
  opt.n = n;
  opt.max_len = 8;
  opt.max_cost = 6;
  opt.max_bound = 6;
  opt.denominator = denominator;
  opt.zero_cost_percent = 10;
  return random_instance(opt, seed);
}

SolveReport solve(const NormalizedInstance& norm, Objective o) {
  switch (o) {
    case Objective::L1: return solve_l1(norm);
    case Objective::Chebyshev: return solve_chebyshev(norm);
    case Objective::HammingBottleneck: return solve_hamming_bottleneck(norm);
    case Objective::HammingSum: return solve_hamming_sum_exact(norm);
  }
  return {};
}

constexpr Objective kAll[] = {Objective::L1, Objective::Chebyshev, Objective::HammingBottleneck,
                              Objective::HammingSum};

}  // namespace

TEST(Property, RowsMatchCriterion) {
  // is_feasible (gap rows) agrees with the criterion evaluated on the modified tree.
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = small(seed, 10, 3);
    const auto norm = normalize(inst, inst.targets[0], inst.targets[1]);
    ModificationPlan plan{zeros(norm.edge_count())};
    for (EdgeId e = 0; e < norm.edge_count(); ++e) {
      plan.amount[e] = norm.bound[e] * Rational(uniform_int(rng, 0, 4), 4);
    }
    const Tree modified = inst.tree.with_lengths(new_lengths(norm, plan));
    EXPECT_EQ(is_feasible(norm, plan), is_weakly_longest(modified, norm.a, norm.b).holds) << seed;
  }
}

TEST(Property, RowSumsMatchExplicitSupports) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = small(seed, 14);
    const auto norm = normalize(inst, inst.targets[0], inst.targets[1]);
    std::vector<Rational> x(norm.edge_count());
    for (auto& v : x) v = uniform_int(rng, 0, 100);
    const auto sums = norm.row_sums(x);
    for (std::size_t i = 0; i < norm.rows.size(); ++i) {
      Rational expect = 0;
      for (EdgeId e : norm.support(norm.rows[i])) expect += x[e];
      EXPECT_EQ(sums[i], expect);
    }
  }
}

TEST(Property, SolversMatchOraclesOnSmallTrees) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = small(seed, 8);
    const auto norm = normalize(inst, inst.targets[0], inst.targets[1]);
    const auto cheb = solve_chebyshev(norm);
    const auto cheb_oracle = oracle::chebyshev(norm);
    ASSERT_EQ(cheb.status == Status::Optimal, cheb_oracle.has_value()) << seed;
    if (cheb_oracle) EXPECT_EQ(cheb.cost, *cheb_oracle) << seed;

    const auto hb = solve_hamming_bottleneck(norm);
    const auto hb_oracle = oracle::hamming(norm, oracle::HammingVariant::Bottleneck);
    if (hb_oracle.cost) EXPECT_EQ(hb.cost, *hb_oracle.cost) << seed;

    const auto hs = solve_hamming_sum_exact(norm);
    const auto hs_oracle = oracle::hamming(norm, oracle::HammingVariant::Sum);
    if (hs_oracle.cost) {
      EXPECT_EQ(hs.cost, *hs_oracle.cost) << seed;
      EXPECT_EQ(std::get<HammingTrace>(hs.certificate).selection, hs_oracle.selection) << seed;
    }
  }
}

TEST(Property, LargerBoundsNeverCostMore) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = small(seed);
    auto looser = inst;
    for (auto& b : looser.inc_bound) b += 2;
    for (auto& b : looser.dec_bound) b += 2;
    const auto a = inst.targets[0], b = inst.targets[1];
    for (Objective o : kAll) {
      const auto tight = solve(normalize(inst, a, b), o);
      const auto loose = solve(normalize(looser, a, b), o);
      if (tight.status == Status::Optimal) {
        ASSERT_EQ(loose.status, Status::Optimal);
        EXPECT_LE(loose.cost, tight.cost) << seed << " " << to_string(o);
      }
    }
  }
}

TEST(Property, CostScaling) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = small(seed);
    auto scaled = inst;
    for (auto& c : scaled.cost) c *= 3;
    const auto a = inst.targets[0], b = inst.targets[1];
    for (Objective o : kAll) {
      const auto x = solve(normalize(inst, a, b), o);
      const auto y = solve(normalize(scaled, a, b), o);
      ASSERT_EQ(x.status, y.status);
      EXPECT_EQ(y.cost, 3 * x.cost) << seed << " " << to_string(o);
    }
  }
}

TEST(Property, LengthScalingForL1) {
  // Scaling lengths and bounds scales every gap, so the l1 optimum scales too.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = small(seed);
    std::vector<Rational> lengths;
    for (const auto& e : inst.tree.edges()) lengths.push_back(e.length * Rational(5, 2));
    auto scaled = inst;
    scaled.tree = inst.tree.with_lengths(lengths);
    for (auto& b : scaled.inc_bound) b *= Rational(5, 2);
    for (auto& b : scaled.dec_bound) b *= Rational(5, 2);
    const auto a = inst.targets[0], b = inst.targets[1];
    const auto x = solve_l1(normalize(inst, a, b));
    const auto y = solve_l1(normalize(scaled, a, b));
    ASSERT_EQ(x.status, y.status);
    EXPECT_EQ(y.cost, Rational(5, 2) * x.cost) << seed;
  }
}

TEST(Property, ChebyshevBelowL1AndHammingOrdering) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = small(seed, 10);
    const auto norm = normalize(inst, inst.targets[0], inst.targets[1]);
    const auto l1 = solve_l1(norm);
    if (l1.status != Status::Optimal) continue;
    EXPECT_LE(solve_chebyshev(norm).cost, l1.cost);
    EXPECT_LE(solve_hamming_bottleneck(norm).cost, solve_hamming_sum_exact(norm).cost);
  }
}

TEST(Property, StarSolverMatchesLp) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GeneratorOptions opt;
    opt.shape = TreeShape::Star;
    opt.n = 3 + seed % 12;
    opt.denominator = 4;
    const auto inst = random_instance(opt, seed);
    const auto a = inst.targets[0], b = inst.targets[1];
    const auto star = solve_star_l1(inst, a, b);
    const auto lp = solve_l1(normalize(inst, a, b));
    ASSERT_EQ(star.status, lp.status) << seed;
    EXPECT_EQ(star.cost, lp.cost) << seed;
    if (star.status == Status::Optimal) EXPECT_TRUE(verify_solution(inst, star).ok) << seed;
  }
}

TEST(Property, WeakCriterionMeansDiameter) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = small(seed, 3 + seed % 10, 2);
    const Tree& t = inst.tree;
    const Rational diameter = longest_path(t).length;
    const auto leaves = t.leaves();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        const bool longest = distance(t, leaves[i], leaves[j]) == diameter;
        EXPECT_EQ(is_weakly_longest(t, leaves[i], leaves[j]).holds, longest) << seed;
      }
    }
  }
}
