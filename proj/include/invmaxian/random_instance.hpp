#pragma once

#include <cstdint>
#include <random>

#include "invmaxian/instance.hpp"

namespace invmaxian {

enum class TreeShape { Recursive, Star, Caterpillar };

struct GeneratorOptions {
  std::size_t n = 10;
  TreeShape shape = TreeShape::Recursive;
  std::size_t targets = 2;
  std::int64_t max_len = 10;     // lengths in [1, max_len]
  std::int64_t max_cost = 10;    // costs in [0, max_cost] (see zero_cost_percent)
  std::int64_t max_bound = 10;   // both bounds in [0, max_bound]
  std::int64_t max_weight = 1;   // weights in [1, max_weight]
  std::int64_t denominator = 1;  // > 1: lengths, costs and bounds become k/q, q in [1, denominator]
  int zero_cost_percent = 0;
  Objective objective = Objective::L1;
};

/// Deterministic for a given (options, seed) on every platform: only
/// std::mt19937_64 output is used, never the std distributions.
[[nodiscard]] InverseInstance random_instance(const GeneratorOptions& options, std::uint64_t seed);

/// Unbiased integer in [lo, hi] from a 64-bit engine.
[[nodiscard]] std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace invmaxian
