#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "invmaxian/instance.hpp"

namespace invmaxian {

/// Exit codes: 0 optimal / check passed, 2 infeasible, 1 any error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

/// Entry point of the `invmaxian` tool; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ScalingPoint {
  std::size_t n = 0;
  double seconds = 0;
};

struct ScalingFit {
  double coefficient = 0;      // a in T(n) = a * n log n
  double worst_ratio = 0;      // max over points of max(T/model, model/T)
};

/// Times normalize + solve on random recursive trees (always feasible:
/// every decrease bound covers the edge length). Minimum over `repeat` runs.
[[nodiscard]] std::vector<ScalingPoint> run_scaling(Objective objective, const std::vector<std::size_t>& sizes,
                                                    std::uint64_t seed, int repeat);

/// Least-squares fit of T(n) = a n log n through the origin.
[[nodiscard]] ScalingFit fit_n_log_n(const std::vector<ScalingPoint>& points);

}  // namespace invmaxian
