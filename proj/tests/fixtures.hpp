#pragma once

#include <string>
#include <vector>

#include "invmaxian/instance.hpp"

namespace invmaxian::testing {

// T1: a(0) - u(1) - b(2), u(1) - v(3); edges au(0)=2, ub(1)=3, uv(2)=4.
inline constexpr VertexId kA = 0, kU = 1, kB = 2, kV = 3;

inline Tree t1_tree() {
  return Tree({1, 1, 1, 1}, {{0, 1, Rational(2)}, {1, 2, Rational(3)}, {1, 3, Rational(4)}});
}

inline InverseInstance t1(std::vector<Rational> cost = {1, 1, 1}, std::vector<Rational> bound = {10, 10, 10},
                          Objective objective = Objective::L1) {
  InverseInstance inst{t1_tree(), {kA, kB}, std::move(cost), bound, bound, objective, {"a", "u", "b", "v"},
                       {"au", "ub", "uv"}};
  inst.validate();
  return inst;
}

// Star with center 0 and leaves 1..k; edge i-1 joins 0 and i.
inline InverseInstance star(const std::vector<Rational>& lengths, std::vector<Rational> cost,
                            const std::vector<Rational>& bound, VertexId a = 1, VertexId b = 2) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lengths.size(); ++i) edges.push_back({0, i + 1, lengths[i]});
  InverseInstance inst{Tree(std::vector<Rational>(lengths.size() + 1, Rational(1)), std::move(edges)),
                       {a, b},
                       std::move(cost),
                       bound,
                       bound,
                       Objective::L1,
                       {},
                       {}};
  inst.validate();
  return inst;
}

inline std::string data_path(const std::string& name) { return std::string(INVMAXIAN_TEST_DATA) + "/" + name; }

}  // namespace invmaxian::testing
