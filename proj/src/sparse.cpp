#include "helmdg/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace helmdg {

SparseComplexMatrix::SparseComplexMatrix(Index n, std::vector<Offset> col_ptr, std::vector<Index> row_idx,
                                         std::vector<Complex> values)
    : n_(n), col_ptr_(std::move(col_ptr)), row_idx_(std::move(row_idx)), values_(std::move(values)) {
  if (n_ < 0) throw std::invalid_argument("negative matrix dimension");
  if (col_ptr_.size() != static_cast<std::size_t>(n_) + 1 || col_ptr_.front() != 0 ||
      col_ptr_.back() != static_cast<Offset>(row_idx_.size()) || row_idx_.size() != values_.size()) {
    throw std::invalid_argument("inconsistent compressed-column arrays");
  }
  for (Index j = 0; j < n_; ++j) {
    if (col_ptr_[j + 1] < col_ptr_[j]) throw std::invalid_argument("column pointers decrease");
    for (Offset p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
      const Index i = row_idx_[p];
      if (i < 0 || i >= n_) throw std::invalid_argument("row index out of range");
      if (p > col_ptr_[j] && row_idx_[p - 1] >= i) {
        throw std::invalid_argument("row indices not strictly increasing in column " + std::to_string(j));
      }
    }
  }
}

SparseComplexMatrix SparseComplexMatrix::identity(Index n) {
  std::vector<Offset> ptr(n + 1);
  std::iota(ptr.begin(), ptr.end(), Offset{0});
  std::vector<Index> rows(n);
  std::iota(rows.begin(), rows.end(), Index{0});
  return {n, std::move(ptr), std::move(rows), std::vector<Complex>(n, Complex(1.0, 0.0))};
}

Complex SparseComplexMatrix::coeff(Index i, Index j) const {
  const auto rows = column_rows(j);
  auto it = std::lower_bound(rows.begin(), rows.end(), i);
  if (it == rows.end() || *it != i) return {};
  return values_[col_ptr_[j] + (it - rows.begin())];
}

bool SparseComplexMatrix::is_stored(Index i, Index j) const {
  const auto rows = column_rows(j);
  return std::binary_search(rows.begin(), rows.end(), i);
}

std::vector<Complex> SparseComplexMatrix::multiply(std::span<const Complex> x) const {
  if (x.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("multiply: size mismatch");
  std::vector<Complex> y(n_);
  for (Index j = 0; j < n_; ++j) {
    const Complex xj = x[j];
    for (Offset p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) y[row_idx_[p]] += values_[p] * xj;
  }
  return y;
}

SparseComplexMatrix SparseComplexMatrix::transpose() const {
  std::vector<Offset> ptr(n_ + 1, 0);
  for (Index i : row_idx_) ++ptr[i + 1];
  std::partial_sum(ptr.begin(), ptr.end(), ptr.begin());
  std::vector<Offset> next(ptr.begin(), ptr.end() - 1);
  std::vector<Index> rows(row_idx_.size());
  std::vector<Complex> vals(values_.size());
  for (Index j = 0; j < n_; ++j) {
    for (Offset p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
      const Offset q = next[row_idx_[p]]++;
      rows[q] = j;
      vals[q] = values_[p];
    }
  }
  return {n_, std::move(ptr), std::move(rows), std::move(vals)};
}

double SparseComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

Triplets SparseComplexMatrix::to_triplets() const {
  Triplets t(n_);
  t.reserve(row_idx_.size());
  for (Index j = 0; j < n_; ++j) {
    for (Offset p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) t.add(row_idx_[p], j, values_[p]);
  }
  return t;
}

SparseComplexMatrix compress(const Triplets& triplets) {
  const Index n = triplets.dimension();
  const auto entries = triplets.entries();
  const std::size_t count = entries.size();
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n) {
      throw std::out_of_range("triplet (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                              ") outside a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
  }

  // Two stable counting sorts: by row, then by column. Duplicates keep
  // insertion order so the summation order is deterministic.
  auto bucket = [n, count](std::span<const std::size_t> in, auto key) {
    std::vector<std::size_t> start(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t idx : in) ++start[key(idx) + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<std::size_t> out(count);
    for (std::size_t idx : in) out[start[key(idx)]++] = idx;
    return out;
  };
  std::vector<std::size_t> identity(count);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  const auto by_row = bucket(identity, [&](std::size_t k) { return entries[k].row; });
  const auto sorted = bucket(by_row, [&](std::size_t k) { return entries[k].col; });

  std::vector<Offset> col_ptr(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Index> rows;
  std::vector<Complex> values;
  rows.reserve(count);
  values.reserve(count);

  std::size_t k = 0;
  for (Index j = 0; j < n; ++j) {
    while (k < count && entries[sorted[k]].col == j) {
      const Index i = entries[sorted[k]].row;
      Complex sum = entries[sorted[k]].value;
      ++k;
      while (k < count && entries[sorted[k]].col == j && entries[sorted[k]].row == i) {
        sum += entries[sorted[k]].value;
        ++k;
      }
      if (sum != Complex(0.0, 0.0)) {
        rows.push_back(i);
        values.push_back(sum);
      }
    }
    col_ptr[j + 1] = static_cast<Offset>(rows.size());
  }
  return {n, std::move(col_ptr), std::move(rows), std::move(values)};
}

Permutation::Permutation(std::vector<Index> order) : order_(std::move(order)) {
  const auto n = static_cast<Index>(order_.size());
  inverse_.assign(n, -1);
  for (Index k = 0; k < n; ++k) {
    const Index v = order_[k];
    if (v < 0 || v >= n || inverse_[v] != -1) {
      throw std::invalid_argument("permutation is not a bijection on 0.." + std::to_string(n - 1));
    }
    inverse_[v] = k;
  }
}

Permutation Permutation::identity(Index n) {
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  return Permutation(std::move(p));
}

Permutation Permutation::reversal(Index n) {
  std::vector<Index> p(n);
  for (Index k = 0; k < n; ++k) p[k] = n - 1 - k;
  return Permutation(std::move(p));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<Index> p(outer.size());
  for (Index k = 0; k < outer.size(); ++k) p[k] = inner[outer[k]];
  return Permutation(std::move(p));
}

SparseComplexMatrix permute_symmetric(const SparseComplexMatrix& a, const Permutation& p) {
  const Index n = a.size();
  if (p.size() != n) {
    throw std::invalid_argument("permute_symmetric: permutation of size " + std::to_string(p.size()) +
                                " for a matrix of size " + std::to_string(n));
  }
  std::vector<Offset> ptr(n + 1, 0);
  std::vector<Index> rows(a.nnz());
  std::vector<Complex> vals(a.nnz());
  std::vector<std::pair<Index, Complex>> column;
  for (Index k = 0; k < n; ++k) {
    const Index old = p[k];
    const auto r = a.column_rows(old);
    const auto v = a.column_values(old);
    column.clear();
    for (std::size_t q = 0; q < r.size(); ++q) column.emplace_back(p.position_of(r[q]), v[q]);
    std::sort(column.begin(), column.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Offset out = ptr[k];
    for (const auto& [row, value] : column) {
      rows[out] = row;
      vals[out] = value;
      ++out;
    }
    ptr[k + 1] = out;
  }
  return {n, std::move(ptr), std::move(rows), std::move(vals)};
}

AdjacencyGraph AdjacencyGraph::from_edges(Index n, std::span<const std::pair<Index, Index>> edges) {
  std::vector<std::vector<Index>> lists(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("graph edge endpoint out of range");
    if (u == v) continue;
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  AdjacencyGraph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Index v = 0; v < n; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<Offset>(l.size());
  }
  g.adjacency_.reserve(g.offsets_.back());
  for (auto& l : lists) g.adjacency_.insert(g.adjacency_.end(), l.begin(), l.end());
  return g;
}

bool AdjacencyGraph::has_edge(Index u, Index v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

AdjacencyGraph AdjacencyGraph::induced(std::span<const Index> vertices) const {
  std::vector<Index> local(size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Index>(i);
  AdjacencyGraph g;
  g.offsets_.assign(vertices.size() + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::vector<Index> nb;
    for (Index w : neighbors(vertices[i])) {
      if (local[w] >= 0) nb.push_back(local[w]);
    }
    std::sort(nb.begin(), nb.end());
    g.adjacency_.insert(g.adjacency_.end(), nb.begin(), nb.end());
    g.offsets_[i + 1] = static_cast<Offset>(g.adjacency_.size());
  }
  return g;
}

AdjacencyGraph AdjacencyGraph::permuted(const Permutation& p) const {
  if (p.size() != size()) throw std::invalid_argument("permuted: size mismatch");
  AdjacencyGraph g;
  g.offsets_.assign(offsets_.size(), 0);
  g.adjacency_.reserve(adjacency_.size());
  for (Index k = 0; k < size(); ++k) {
    std::vector<Index> nb;
    for (Index w : neighbors(p[k])) nb.push_back(p.position_of(w));
    std::sort(nb.begin(), nb.end());
    g.adjacency_.insert(g.adjacency_.end(), nb.begin(), nb.end());
    g.offsets_[k + 1] = static_cast<Offset>(g.adjacency_.size());
  }
  return g;
}

AdjacencyGraph pattern_graph(const SparseComplexMatrix& a) {
  std::vector<std::pair<Index, Index>> edges;
  edges.reserve(a.nnz());
  for (Index j = 0; j < a.size(); ++j) {
    for (Index i : a.column_rows(j)) {
      if (i != j) edges.emplace_back(i, j);
    }
  }
  return AdjacencyGraph::from_edges(a.size(), edges);
}

}  // namespace helmdg
