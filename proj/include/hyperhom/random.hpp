#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hyperhom/hypergraph.hpp"

namespace hyperhom {

/// Seeded source of bounded integers. Built on mt19937_64, whose output is
/// fixed by the standard, with its own reduction to a range, so streams are
/// identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

struct RandomHypergraphOptions {
  std::size_t vertices = 4;
  std::size_t edges = 4;
  std::uint64_t seed = 0;
  std::size_t max_arity = 2;
  bool allow_empty_edges = false;  // permit (∅,∅)
};

/// Each edge draws (|A|,|B|) uniformly from [0,K]² (excluding (0,0) unless
/// allowed), then disjoint vertex sets of those sizes. Draws that would
/// create an inverse pair, or need more vertices than exist, are redrawn.
/// Throws Error if no valid edge can be drawn.
OrientedHypergraph random_hypergraph(const RandomHypergraphOptions& options);

/// Connected graph on `vertices` vertices with `edges` ≥ vertices−1 edges:
/// a random spanning tree plus random extra edges (parallel edges allowed,
/// inverse pairs not), in shuffled edge order.
OrientedHypergraph random_connected_graph(std::size_t vertices, std::size_t edges, std::uint64_t seed);

}  // namespace hyperhom
