#include "hyperhom/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace hyperhom {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

namespace {

using Side = std::vector<std::size_t>;
constexpr int kMaxAttemptsPerEdge = 10000;

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

OrientedHypergraph random_hypergraph(const RandomHypergraphOptions& options) {
  Rng rng(options.seed);
  const std::size_t n = options.vertices;
  std::vector<Edge> edges;
  std::set<std::pair<Side, Side>> present;

  for (std::size_t j = 0; j < options.edges; ++j) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttemptsPerEdge && !placed; ++attempt) {
      const auto a = static_cast<std::size_t>(rng.below(options.max_arity + 1));
      const auto b = static_cast<std::size_t>(rng.below(options.max_arity + 1));
      if (a == 0 && b == 0 && !options.allow_empty_edges) continue;
      if (a + b > n) continue;
      // Partial Fisher-Yates: the first a+b entries become a random sample.
      std::vector<std::size_t> pool(n);
      std::iota(pool.begin(), pool.end(), std::size_t{0});
      for (std::size_t i = 0; i < a + b; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
      Side tails(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(a));
      Side heads(pool.begin() + static_cast<std::ptrdiff_t>(a), pool.begin() + static_cast<std::ptrdiff_t>(a + b));
      std::sort(tails.begin(), tails.end());
      std::sort(heads.begin(), heads.end());
      if (tails != heads && present.contains({heads, tails})) continue;
      present.emplace(tails, heads);
      edges.push_back(Edge{std::move(tails), std::move(heads)});
      placed = true;
    }
    if (!placed) throw Error("could not draw a valid edge; too few vertices for the requested arity");
  }
  return OrientedHypergraph(OrientedHypergraph::default_vertex_names(n), std::move(edges));
}

OrientedHypergraph random_connected_graph(std::size_t vertices, std::size_t edges, std::uint64_t seed) {
  if (vertices == 0) throw Error("a connected graph needs at least one vertex");
  if (edges + 1 < vertices) throw Error("too few edges for a connected graph");
  if (vertices == 1 && edges > 0) throw Error("a single vertex carries no edges");
  Rng rng(seed);
  std::vector<Edge> out;
  std::set<std::pair<std::size_t, std::size_t>> present;
  auto add = [&](std::size_t u, std::size_t v) {
    present.emplace(u, v);
    out.push_back(Edge{{u}, {v}});
  };
  for (std::size_t i = 1; i < vertices; ++i) {
    const auto parent = static_cast<std::size_t>(rng.below(i));
    if (rng.below(2) == 0) add(parent, i);
    else add(i, parent);
  }
  while (out.size() < edges) {
    const auto u = static_cast<std::size_t>(rng.below(vertices));
    const auto v = static_cast<std::size_t>(rng.below(vertices));
    if (u == v || present.contains({v, u})) continue;
    add(u, v);
  }
  shuffle(out, rng);
  return OrientedHypergraph(OrientedHypergraph::default_vertex_names(vertices), std::move(out));
}

}  // namespace hyperhom
