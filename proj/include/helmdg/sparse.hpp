#pragma once

#include <span>
#include <utility>
#include <vector>

#include "helmdg/types.hpp"

namespace helmdg {

struct Triplet {
  Index row = 0;
  Index col = 0;
  Complex value;
};

/// Coordinate-form accumulator for an N×N matrix. Duplicates are allowed and
/// are summed by compress().
class Triplets {
 public:
  explicit Triplets(Index n = 0) : n_(n) {}

  void add(Index row, Index col, Complex value) { entries_.push_back({row, col, value}); }
  void reserve(std::size_t count) { entries_.reserve(count); }

  Index dimension() const { return n_; }
  std::span<const Triplet> entries() const { return entries_; }
  std::span<Triplet> entries() { return entries_; }

 private:
  Index n_;
  std::vector<Triplet> entries_;
};

/// Square complex matrix in compressed-column form. Row indices are strictly
/// increasing within each column; the structure is immutable.
class SparseComplexMatrix {
 public:
  SparseComplexMatrix() = default;

  /// Takes ownership of CSC arrays. Throws std::invalid_argument when the
  /// arrays are inconsistent or rows are not strictly increasing per column.
  SparseComplexMatrix(Index n, std::vector<Offset> col_ptr, std::vector<Index> row_idx,
                      std::vector<Complex> values);

  static SparseComplexMatrix identity(Index n);

  Index size() const { return n_; }
  Offset nnz() const { return static_cast<Offset>(row_idx_.size()); }

  std::span<const Offset> col_ptr() const { return col_ptr_; }
  std::span<const Index> row_indices() const { return row_idx_; }
  std::span<const Complex> values() const { return values_; }

  std::span<const Index> column_rows(Index j) const {
    return {row_idx_.data() + col_ptr_[j], static_cast<std::size_t>(col_ptr_[j + 1] - col_ptr_[j])};
  }
  std::span<const Complex> column_values(Index j) const {
    return {values_.data() + col_ptr_[j], static_cast<std::size_t>(col_ptr_[j + 1] - col_ptr_[j])};
  }

  /// Stored value at (i, j), zero if not stored.
  Complex coeff(Index i, Index j) const;
  bool is_stored(Index i, Index j) const;

  std::vector<Complex> multiply(std::span<const Complex> x) const;
  SparseComplexMatrix transpose() const;
  double max_abs() const;

  /// Column-major triplets of the stored entries.
  Triplets to_triplets() const;

 private:
  Index n_ = 0;
  std::vector<Offset> col_ptr_{0};
  std::vector<Index> row_idx_;
  std::vector<Complex> values_;
};

/// Sums duplicates (in insertion order) and drops entries whose sum is an
/// exact complex zero. Throws std::out_of_range on an index outside [0, N).
SparseComplexMatrix compress(const Triplets& triplets);

/// A bijection on {0..N-1} stored as an elimination order: `order()[k]` is
/// the original index placed at position k (the `p` of A(p, p)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `order` is a bijection.
  explicit Permutation(std::vector<Index> order);

  static Permutation identity(Index n);
  static Permutation reversal(Index n);

  Index size() const { return static_cast<Index>(order_.size()); }
  Index operator[](Index position) const { return order_[position]; }
  Index position_of(Index original) const { return inverse_[original]; }

  std::span<const Index> order() const { return order_; }
  std::span<const Index> inverse() const { return inverse_; }

  bool operator==(const Permutation& other) const { return order_ == other.order_; }

 private:
  std::vector<Index> order_;
  std::vector<Index> inverse_;
};

/// Permutation equivalent to applying `inner` and then `outer`:
/// permute_symmetric(A, compose(outer, inner)) ==
/// permute_symmetric(permute_symmetric(A, inner), outer).
Permutation compose(const Permutation& outer, const Permutation& inner);

/// P A Pᵀ: result(k, l) = A(p[k], p[l]). Throws std::invalid_argument on a
/// dimension mismatch.
SparseComplexMatrix permute_symmetric(const SparseComplexMatrix& a, const Permutation& p);

/// Undirected graph without self loops, adjacency lists sorted ascending.
class AdjacencyGraph {
 public:
  AdjacencyGraph() = default;

  /// Symmetrizes, removes duplicates and self loops.
  static AdjacencyGraph from_edges(Index n, std::span<const std::pair<Index, Index>> edges);

  Index size() const { return static_cast<Index>(offsets_.size()) - 1; }
  std::span<const Index> neighbors(Index v) const {
    return {adjacency_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  Index degree(Index v) const { return static_cast<Index>(offsets_[v + 1] - offsets_[v]); }
  Offset edge_count() const { return static_cast<Offset>(adjacency_.size()) / 2; }
  bool has_edge(Index u, Index v) const;

  /// Subgraph induced by `vertices`; local vertex i is vertices[i].
  AdjacencyGraph induced(std::span<const Index> vertices) const;

  /// Same graph with vertex p[k] renamed to k.
  AdjacencyGraph permuted(const Permutation& p) const;

 private:
  std::vector<Offset> offsets_{0};
  std::vector<Index> adjacency_;
};

/// Graph of the off-diagonal pattern of A + Aᵀ.
AdjacencyGraph pattern_graph(const SparseComplexMatrix& a);

}  // namespace helmdg
