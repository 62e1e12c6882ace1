#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "invmaxian/error.hpp"
#include "invmaxian/lp_l1.hpp"
#include "invmaxian/simplex.hpp"

using namespace invmaxian;
using namespace invmaxian::testing;

TEST(Simplex, SmallLpWithCertificate) {
  // min x + 2y  s.t. x + y >= 3, x <= 2
  LpProblem lp;
  lp.cost = {1, 2};
  lp.upper = {Rational(2), std::nullopt};
  lp.rows.push_back({{{0, 1}, {1, 1}}, 3});
  const auto res = solve_lp(lp);
  ASSERT_EQ(res.status, LpStatus::Optimal);
  EXPECT_EQ(res.certificate.primal, (std::vector<Rational>{2, 1}));
  EXPECT_EQ(res.certificate.primal_objective, 4);
  EXPECT_TRUE(check_certificate(lp, res.certificate).ok);
}

TEST(Simplex, InfeasibleAndUnbounded) {
  LpProblem lp;
  lp.cost = {1};
  lp.upper = {Rational(1)};
  lp.rows.push_back({{{0, 1}}, 2});
  EXPECT_EQ(solve_lp(lp).status, LpStatus::Infeasible);

  LpProblem un;
  un.cost = {-1};
  un.upper = {std::nullopt};
  un.rows.push_back({{{0, 1}}, 1});
  EXPECT_EQ(solve_lp(un).status, LpStatus::Unbounded);
}

TEST(Simplex, CheckerRejectsBadCertificate) {
  LpProblem lp;
  lp.cost = {1, 1};
  lp.upper = {Rational(5), Rational(5)};
  lp.rows.push_back({{{0, 1}, {1, 1}}, 2});
  auto cert = solve_lp(lp).certificate;
  cert.primal[0] += 1;
  EXPECT_FALSE(check_certificate(lp, cert).ok);
}

TEST(L1, T1UnitCosts) {
  const auto norm = normalize(t1(), kA, kB);
  const auto report = solve_l1(norm);
  ASSERT_EQ(report.status, Status::Optimal);
  EXPECT_EQ(report.cost, 2);
  EXPECT_TRUE(is_feasible(norm, report.plan));
  const auto* cert = std::get_if<LpCertificate>(&report.certificate);
  ASSERT_NE(cert, nullptr);
  EXPECT_EQ(cert->dual_objective, 2);
  EXPECT_TRUE(check_certificate(make_l1_lp(norm), *cert).ok);
}

TEST(L1, NothingToDo) {
  auto inst = t1();
  inst.targets = {kV, kB};
  const auto report = solve_l1(normalize(inst, kV, kB));
  EXPECT_EQ(report.status, Status::Optimal);
  EXPECT_EQ(report.cost, 0);
}

TEST(L1, Infeasible) {
  const auto norm = normalize(t1({1, 1, 1}, {0, 0, 0}), kA, kB);
  const auto report = solve_l1(norm);
  EXPECT_EQ(report.status, Status::Infeasible);
  EXPECT_EQ(report.violating_leaves, (std::vector<VertexId>{kV}));
}

TEST(L1, LpDump) {
  const auto inst = t1();
  std::ostringstream out;
  write_lp_format(out, inst, normalize(inst, kA, kB));
  const std::string s = out.str();
  EXPECT_NE(s.find("Minimize"), std::string::npos);
  EXPECT_NE(s.find("x0 + x2 >= 2"), std::string::npos);
  EXPECT_NE(s.find("0 <= x2 <= 4"), std::string::npos);
  EXPECT_NE(s.find("End"), std::string::npos);
}

TEST(Pwl, AbsoluteValue) {
  ConvexPwl f{3, -1, {{3, 2}}};
  EXPECT_EQ(f(Rational(0)), 3);
  EXPECT_EQ(f(Rational(5)), 2);
  auto m = minimize_pwl_convex(f, 0, 10);
  EXPECT_EQ(m.argmin, 3);
  EXPECT_EQ(m.value, 0);
  m = minimize_pwl_convex(f, 5, 10);
  EXPECT_EQ(m.argmin, 5);
  EXPECT_EQ(m.value, 2);
  EXPECT_THROW((void)minimize_pwl_convex(f, 2, 1), Error);
}

TEST(Pwl, FlatStretchGivesLeftmost) {
  ConvexPwl f{0, -1, {{1, 1}, {4, 1}}};  // slope -1, 0, 1
  EXPECT_EQ(minimize_pwl_convex(f, 0, 10).argmin, 1);
}

TEST(Star, WorkedExample) {
  const auto inst = star({1, 5, 4, 2}, {1, 1, 1, 1}, {100, 100, 100, 100});
  EXPECT_EQ(star_center(inst.tree), VertexId{0});
  const auto report = solve_star_l1(inst, 1, 2);
  ASSERT_EQ(report.status, Status::Optimal);
  EXPECT_EQ(report.cost, 3);
  const auto* s = std::get_if<StarReport>(&report.certificate);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->chosen, StarCase::AtMostLongerTarget);
  EXPECT_EQ(s->case1.level, 2);
  EXPECT_EQ(report.cost, solve_l1(normalize(inst, 1, 2)).cost);
}

TEST(Star, Center) {
  EXPECT_EQ(star_center(t1_tree()), VertexId{kU});
  const Tree path4({1, 1, 1, 1}, {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {2, 3, Rational(1)}});
  EXPECT_FALSE(star_center(path4).has_value());
}

TEST(Star, Case2Wins) {
  // Raising only a to <= l_b is blocked, so both targets go up.
  const auto inst = star({1, 2, 9}, {1, 1, 100}, {100, 100, 0});
  const auto report = solve_star_l1(inst, 1, 2);
  ASSERT_EQ(report.status, Status::Optimal);
  const auto* s = std::get_if<StarReport>(&report.certificate);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->chosen, StarCase::AboveLongerTarget);
  EXPECT_EQ(report.cost, 8 + 7);
  EXPECT_EQ(report.cost, solve_l1(normalize(inst, 1, 2)).cost);
}
