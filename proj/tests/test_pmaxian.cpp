#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "invmaxian/hamming.hpp"
#include "invmaxian/pmaxian.hpp"

using namespace invmaxian;
using namespace invmaxian::testing;

TEST(PMaxian, SinglePairMatchesSolvePair) {
  const auto inst = t1();
  const auto all = solve_inverse_pmaxian(inst);
  const auto one = solve_pair(inst, kA, kB);
  EXPECT_EQ(all.cost, one.cost);
  ASSERT_EQ(all.pairs.size(), 1u);
}

TEST(PMaxian, PicksCheapestPair) {
  auto inst = t1();
  inst.targets = {kA, kB, kV};
  const auto report = solve_inverse_pmaxian(inst);
  ASSERT_EQ(report.status, Status::Optimal);
  EXPECT_EQ(report.cost, 0);
  EXPECT_EQ(report.a, kB);
  EXPECT_EQ(report.b, kV);
  EXPECT_EQ(report.pairs.size(), 3u);
  EXPECT_TRUE(verify_solution(inst, report).ok);
}

TEST(PMaxian, ParallelAgrees) {
  auto inst = star({1, 5, 4, 2, 3}, {1, 2, 3, 4, 5}, {3, 3, 3, 3, 3});
  inst.targets = {1, 2, 3, 4};
  for (auto o : {Objective::L1, Objective::Chebyshev, Objective::HammingBottleneck, Objective::HammingSum}) {
    inst.objective = o;
    const auto seq = solve_inverse_pmaxian(inst);
    const auto par = solve_inverse_pmaxian(inst, {kDefaultHammingSumLimit, true});
    EXPECT_EQ(seq.status, par.status);
    EXPECT_EQ(seq.cost, par.cost);
    EXPECT_EQ(seq.a, par.a);
    EXPECT_EQ(seq.b, par.b);
  }
}

TEST(PMaxian, AllInfeasible) {
  const auto inst = t1({1, 1, 1}, {0, 0, 0});
  const auto report = solve_inverse_pmaxian(inst);
  EXPECT_EQ(report.status, Status::Infeasible);
  EXPECT_EQ(report.violating_leaves, (std::vector<VertexId>{kV}));
}

TEST(Verify, AcceptsSolverOutputForEveryObjective) {
  for (auto o : {Objective::L1, Objective::Chebyshev, Objective::HammingBottleneck, Objective::HammingSum}) {
    const auto inst = t1({5, 2, 3}, {10, 10, 10}, o);
    const auto report = solve_inverse_pmaxian(inst);
    const auto v = verify_solution(inst, report);
    EXPECT_TRUE(v.ok) << to_string(o);
  }
}

TEST(Verify, DetectsTampering) {
  const auto inst = t1();
  const auto good = solve_inverse_pmaxian(inst);

  auto cheaper = good;
  cheaper.cost -= 1;
  auto v = verify_solution(inst, cheaper);
  EXPECT_FALSE(v.ok);
  ASSERT_FALSE(v.reasons.empty());
  EXPECT_NE(v.reasons.front().find("cost mismatch"), std::string::npos);

  auto too_little = good;
  too_little.plan.amount = zeros(3);
  too_little.cost = 0;
  EXPECT_FALSE(verify_solution(inst, too_little).ok);

  auto out_of_bounds = good;
  out_of_bounds.plan.amount[2] = 5;
  v = verify_solution(inst, out_of_bounds);
  EXPECT_FALSE(v.ok);
}
