#pragma once

// Reference implementations used only by the tests. Each one avoids the
// library's elimination and Smith form code so that agreement means something.

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hyperhom/hypergraph.hpp"
#include "hyperhom/matrix.hpp"
#include "hyperhom/random.hpp"

namespace oracle {

using hyperhom::IntMatrix;
using hyperhom::IntVector;

// Laplace expansion along successive rows. Minors are memoized by the set of
// columns still available, which keeps 8×8 matrices cheap.
inline mpz_class cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("square matrix expected");
  if (n == 0) return 1;
  std::map<unsigned, mpz_class> memo;
  std::function<mpz_class(std::size_t, unsigned)> minor = [&](std::size_t row, unsigned cols) -> mpz_class {
    if (row == n) return 1;
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    mpz_class total = 0;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      if (m(row, c) != 0) total += sign * m(row, c) * minor(row + 1, cols & ~(1u << c));
      sign = -sign;
    }
    memo.emplace(cols, total);
    return total;
  };
  return minor(0, (1u << n) - 1);
}

// Rank over the fraction field by plain Gaussian elimination on mpq_class.
inline std::size_t elimination_rank(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][col] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      const mpq_class f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Searches x ∈ [−bound, bound]^cols with m·x = b.
inline std::optional<IntVector> exhaustive_integer_solve(const IntMatrix& m, const IntVector& b, int bound) {
  IntVector x(m.cols(), mpz_class(-bound));
  while (true) {
    bool hit = true;
    for (std::size_t i = 0; i < m.rows() && hit; ++i) {
      mpz_class s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
      hit = s == b[i];
    }
    if (hit) return x;
    std::size_t k = 0;
    while (k < x.size() && x[k] == bound) x[k++] = -bound;
    if (k == x.size()) return std::nullopt;
    ++x[k];
  }
}

inline IntMatrix random_matrix(hyperhom::Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng.between(lo, hi));
  return m;
}

// ---------------------------------------------------------------------------
// Graph traversal. Every edge of `g` has exactly one tail and one head.

struct Arc {
  std::size_t tail, head;
};

inline std::vector<Arc> arcs(const hyperhom::OrientedHypergraph& g) {
  std::vector<Arc> out;
  for (const auto& e : g.edges()) out.push_back({e.tails.at(0), e.heads.at(0)});
  return out;
}

// True iff `tree` is a combinatorial spanning forest: acyclic, and with as
// many edges as vertices minus components of the whole graph.
inline bool is_combinatorial_spanning_tree(const hyperhom::OrientedHypergraph& g,
                                           const std::vector<std::size_t>& tree) {
  const auto a = arcs(g);
  auto components = [&](const std::vector<std::size_t>& edges, bool& acyclic) {
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    std::size_t count = g.vertex_count();
    acyclic = true;
    for (auto e : edges) {
      auto r1 = find(a[e].tail), r2 = find(a[e].head);
      if (r1 == r2) acyclic = false;
      else parent[r1] = r2, --count;
    }
    return count;
  };
  std::vector<std::size_t> all(a.size());
  std::iota(all.begin(), all.end(), 0);
  bool ignored = true, acyclic = true;
  const std::size_t graph_components = components(all, ignored);
  const std::size_t tree_components = components(tree, acyclic);
  return acyclic && tree_components == graph_components;
}

// Oriented path in the tree from `from` to `to`: +1 for edges walked forward,
// −1 backward. Empty if unreachable.
inline std::map<std::size_t, int> tree_path(const std::vector<Arc>& a, const std::vector<std::size_t>& tree,
                                            std::size_t vertices, std::size_t from, std::size_t to) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertices);  // (neighbor, edge)
  for (auto t : tree) {
    adj[a[t].tail].push_back({a[t].head, t});
    adj[a[t].head].push_back({a[t].tail, t});
  }
  std::vector<std::optional<std::size_t>> via(vertices);
  std::vector<bool> seen(vertices, false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v])
      if (!seen[w]) seen[w] = true, via[w] = e, stack.push_back(w);
  }
  std::map<std::size_t, int> path;
  for (std::size_t v = to; v != from;) {
    const std::size_t e = via[v].value();
    const bool forward = a[e].head == v;
    path[e] = forward ? 1 : -1;
    v = forward ? a[e].tail : a[e].head;
  }
  return path;
}

// Fundamental cycle of chord e: e minus the tree path from its tail to its head.
inline std::vector<int> fundamental_cycle(const hyperhom::OrientedHypergraph& g,
                                          const std::vector<std::size_t>& tree, std::size_t chord) {
  const auto a = arcs(g);
  std::vector<int> x(a.size(), 0);
  x[chord] = 1;
  for (auto [t, s] : tree_path(a, tree, g.vertex_count(), a[chord].tail, a[chord].head)) x[t] = -s;
  return x;
}

// Fundamental cut of tree edge t: removing t splits its tree component in
// two; every edge crossing from the tail side to the head side gets +1, the
// other direction −1.
inline std::vector<int> fundamental_cut(const hyperhom::OrientedHypergraph& g, const std::vector<std::size_t>& tree,
                                        std::size_t t) {
  const auto a = arcs(g);
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (auto s : tree) {
    if (s == t) continue;
    adj[a[s].tail].push_back(a[s].head);
    adj[a[s].head].push_back(a[s].tail);
  }
  std::set<std::size_t> head_side{a[t].head};
  std::vector<std::size_t> stack{a[t].head};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (head_side.insert(w).second) stack.push_back(w);
  }
  std::set<std::size_t> tail_side{a[t].tail};
  stack = {a[t].tail};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (tail_side.insert(w).second) stack.push_back(w);
  }
  std::vector<int> x(a.size(), 0);
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (tail_side.count(a[e].tail) && head_side.count(a[e].head)) x[e] = 1;
    if (head_side.count(a[e].tail) && tail_side.count(a[e].head)) x[e] = -1;
  }
  return x;
}

}  // namespace oracle
