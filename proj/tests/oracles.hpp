// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "helmdg/sparse.hpp"

namespace oracle {

using helmdg::AdjacencyGraph;
using helmdg::Complex;
using helmdg::Index;
using helmdg::Offset;
using helmdg::Permutation;
using helmdg::SparseComplexMatrix;

/// Textbook graph elimination: eliminating v joins all of its uneliminated
/// neighbours pairwise. Returns N + 2·|edges of the filled graph|.
inline Offset elimination_fill(const AdjacencyGraph& g, const Permutation& p) {
  const Index n = g.size();
  std::vector<std::set<Index>> adj(n);
  for (Index v = 0; v < n; ++v) {
    for (Index u : g.neighbors(v)) adj[p.position_of(v)].insert(p.position_of(u));
  }
  Offset edges = 0;
  for (Index k = 0; k < n; ++k) {
    std::vector<Index> later;
    for (Index u : adj[k]) {
      if (u > k) later.push_back(u);
    }
    edges += static_cast<Offset>(later.size());
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        adj[later[a]].insert(later[b]);
        adj[later[b]].insert(later[a]);
      }
    }
  }
  return n + 2 * edges;
}

/// Same count on a bitmask graph (N <= 16); used for exhaustive search.
inline int mask_fill(std::vector<std::uint16_t> adj, const std::vector<int>& order) {
  const int n = static_cast<int>(adj.size());
  std::uint16_t remaining = static_cast<std::uint16_t>((1u << n) - 1);
  int edges = 0;
  for (int v : order) {
    remaining = static_cast<std::uint16_t>(remaining & ~(1u << v));
    const std::uint16_t nb = adj[v] & remaining;
    edges += __builtin_popcount(nb);
    for (int u = 0; u < n; ++u) {
      if (nb & (1u << u)) adj[u] |= static_cast<std::uint16_t>(nb & ~(1u << u));
    }
  }
  return n + 2 * edges;
}

inline std::vector<std::uint16_t> to_masks(const AdjacencyGraph& g) {
  if (g.size() > 16) throw std::invalid_argument("to_masks: graph too large");
  std::vector<std::uint16_t> adj(g.size(), 0);
  for (Index v = 0; v < g.size(); ++v) {
    for (Index u : g.neighbors(v)) adj[v] |= static_cast<std::uint16_t>(1u << u);
  }
  return adj;
}

/// Minimum of mask_fill over all N! elimination orders.
inline int brute_force_min_fill(const AdjacencyGraph& g) {
  const auto adj = to_masks(g);
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  int best = g.size() * g.size();
  do {
    best = std::min(best, mask_fill(adj, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

struct Dense {
  Index n = 0;
  std::vector<Complex> a;  // row-major

  explicit Dense(Index size = 0) : n(size), a(static_cast<std::size_t>(size) * size) {}
  Complex& operator()(Index i, Index j) { return a[static_cast<std::size_t>(i) * n + j]; }
  Complex operator()(Index i, Index j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

inline Dense to_dense(const SparseComplexMatrix& m) {
  Dense d(m.size());
  for (Index j = 0; j < m.size(); ++j) {
    const auto rows = m.column_rows(j);
    const auto vals = m.column_values(j);
    for (std::size_t p = 0; p < rows.size(); ++p) d(rows[p], j) = vals[p];
  }
  return d;
}

/// Doolittle elimination without pivoting, in place: strict lower part holds
/// L, upper part holds U.
inline Dense dense_lu(Dense m) {
  for (Index k = 0; k < m.n; ++k) {
    if (m(k, k) == Complex(0.0)) throw std::runtime_error("dense_lu: zero pivot");
    for (Index i = k + 1; i < m.n; ++i) {
      m(i, k) /= m(k, k);
      const Complex lik = m(i, k);
      if (lik == Complex(0.0)) continue;
      for (Index j = k + 1; j < m.n; ++j) m(i, j) -= lik * m(k, j);
    }
  }
  return m;
}

inline AdjacencyGraph graph_from_pairs(Index n, const std::vector<std::pair<Index, Index>>& edges) {
  return AdjacencyGraph::from_edges(n, edges);
}

inline AdjacencyGraph path_graph(Index n) {
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return AdjacencyGraph::from_edges(n, e);
}

inline AdjacencyGraph star_graph(Index leaves, Index center = 0) {
  std::vector<std::pair<Index, Index>> e;
  for (Index v = 0; v <= leaves; ++v) {
    if (v != center) e.emplace_back(center, v);
  }
  return AdjacencyGraph::from_edges(leaves + 1, e);
}

inline AdjacencyGraph complete_graph(Index n) {
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return AdjacencyGraph::from_edges(n, e);
}

/// 5-point grid graph, vertex (r, c) = r·cols + c.
inline AdjacencyGraph grid_graph(Index rows, Index cols) {
  std::vector<std::pair<Index, Index>> e;
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const Index v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  }
  return AdjacencyGraph::from_edges(rows * cols, e);
}

/// Uniform random labelled tree: vertex v > 0 attaches to a random earlier
/// vertex, then labels are shuffled.
inline AdjacencyGraph random_tree(Index n, std::mt19937_64& rng) {
  std::vector<Index> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<std::pair<Index, Index>> e;
  for (Index v = 1; v < n; ++v) {
    std::uniform_int_distribution<Index> pick(0, v - 1);
    e.emplace_back(label[v], label[pick(rng)]);
  }
  return AdjacencyGraph::from_edges(n, e);
}

/// Erdős–Rényi G(n, prob).
inline AdjacencyGraph random_graph(Index n, double prob, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(prob);
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return AdjacencyGraph::from_edges(n, e);
}

/// Random symmetric pattern with a dominant diagonal and generic complex
/// values (no accidental cancellation).
inline SparseComplexMatrix random_symmetric_matrix(const AdjacencyGraph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  helmdg::Triplets t(g.size());
  for (Index v = 0; v < g.size(); ++v) {
    t.add(v, v, Complex(4.0 + g.degree(v) + u(rng), u(rng)));
    for (Index w : g.neighbors(v)) {
      if (w > v) {
        const Complex z(u(rng), u(rng));
        t.add(v, w, z);
        t.add(w, v, z);
      }
    }
  }
  return helmdg::compress(t);
}

inline Permutation random_permutation(Index n, std::mt19937_64& rng) {
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return Permutation(std::move(order));
}

}  // namespace oracle
