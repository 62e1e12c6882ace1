#include "invmaxian/random_instance.hpp"

#include <algorithm>
#include <string>

#include "invmaxian/error.hpp"

namespace invmaxian {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t draw = rng();
  while (limit != 0 && draw >= limit) draw = rng();
  return lo + static_cast<std::int64_t>(span == 0 ? draw : draw % span);
}

namespace {

Rational draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t denominator) {
  if (denominator <= 1) return Rational(static_cast<long>(uniform_int(rng, lo, hi)));
  const std::int64_t q = uniform_int(rng, 1, denominator);
  Rational r(static_cast<long>(uniform_int(rng, lo * q, hi * q)), static_cast<long>(q));
  r.canonicalize();
  return r;
}

}  // namespace

InverseInstance random_instance(const GeneratorOptions& options, std::uint64_t seed) {
  if (options.n < 2) throw Error(ErrorCode::InvalidInstance, "generator needs n >= 2");
  if (options.max_len < 1) throw Error(ErrorCode::InvalidInstance, "generator needs max_len >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t n = options.n;

  std::vector<VertexId> parent(n, 0);
  const std::size_t spine = std::max<std::size_t>(2, n / 2);
  for (VertexId v = 1; v < n; ++v) {
    switch (options.shape) {
      case TreeShape::Recursive:
        parent[v] = static_cast<VertexId>(uniform_int(rng, 0, static_cast<std::int64_t>(v) - 1));
        break;
      case TreeShape::Star:
        parent[v] = 0;
        break;
      case TreeShape::Caterpillar:
        parent[v] = v < spine ? v - 1
                              : static_cast<VertexId>(uniform_int(rng, 0, static_cast<std::int64_t>(spine) - 1));
        break;
    }
  }

  std::vector<Rational> weights(n);
  for (auto& w : weights) w = Rational(static_cast<long>(uniform_int(rng, 1, std::max<std::int64_t>(1, options.max_weight))));
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<Rational> cost, inc_bound, dec_bound;
  for (VertexId v = 1; v < n; ++v) {
    Rational len = draw(rng, 1, options.max_len, options.denominator);
    edges.push_back({parent[v], v, len});
    Rational c = uniform_int(rng, 0, 99) < options.zero_cost_percent
                        ? Rational(0)
                        : draw(rng, 1, std::max<std::int64_t>(1, options.max_cost), options.denominator);
    cost.push_back(c);
    inc_bound.push_back(draw(rng, 0, options.max_bound, options.denominator));
    dec_bound.push_back(draw(rng, 0, options.max_bound, options.denominator));
  }
  InverseInstance inst{Tree(std::move(weights), std::move(edges)), {}, std::move(cost), std::move(inc_bound),
                       std::move(dec_bound), options.objective, {}, {}};

  std::vector<VertexId> leaves = inst.tree.leaves();
  const std::size_t k = std::min(options.targets, leaves.size());
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(i),
                                                        static_cast<std::int64_t>(leaves.size()) - 1));
    std::swap(leaves[i], leaves[j]);
    inst.targets.push_back(leaves[i]);
  }
  return inst;
}

}  // namespace invmaxian
