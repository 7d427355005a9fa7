#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "helmdg/sparse.hpp"

namespace helmdg {

/// Predicted nnz(L + U - I) for symmetric elimination of the pattern in
/// `order`, with a full diagonal assumed: N + 2·(edges of the filled graph).
/// Runs in O(nnz(L)) via elimination-tree column merging.
Offset symbolic_fill(const AdjacencyGraph& pattern, const Permutation& order);

/// Thrown when a pivot is too small under the no-pivoting strategy.
class ZeroPivot : public std::runtime_error {
 public:
  ZeroPivot(Index column, double magnitude, const std::string& context = {});
  Index column() const { return column_; }
  double magnitude() const { return magnitude_; }

 private:
  Index column_;
  double magnitude_;
};

struct LuOptions {
  /// Relative pivot tolerance: a pivot fails when |pivot| <= tol·max|A|.
  double pivot_tolerance = 1e-13;
  /// Partial threshold pivoting within each column. Off by default: row
  /// exchanges break the PAPᵀ fill structure being measured.
  bool threshold_pivoting = false;
  /// Accept the diagonal when |diag| >= threshold·max|column|.
  double pivot_threshold = 0.1;
  /// Optional capacity hint for the factor arrays (e.g. symbolic_fill).
  Offset reserve_hint = 0;
};

struct LuFactors {
  /// Strictly lower part of L; the unit diagonal is implicit.
  SparseComplexMatrix L;
  SparseComplexMatrix U;
  /// Row permutation from threshold pivoting: row k of P·A is row
  /// row_order[k] of A. Identity when pivoting is off.
  std::vector<Index> row_order;
  Offset combined_nnz = 0;

  Index size() const { return U.size(); }
};

/// Left-looking sparse LU (Gilbert-Peierls). Entries that cancel to an
/// exact zero stay in the pattern.
LuFactors lu_numeric(const SparseComplexMatrix& a, const LuOptions& options = {});

/// Solves A x = b with factors of A. Throws std::invalid_argument on a
/// dimension mismatch.
std::vector<Complex> solve(const LuFactors& factors, const std::vector<Complex>& b);

/// The pattern of L + U - I with a unit diagonal, as a matrix for spy plots.
SparseComplexMatrix combined_factor(const LuFactors& factors);

/// max |A(i,j) - (L U)(i,j)| over all entries, with rows of A taken in
/// factors.row_order. Parallel over columns.
double lu_residual_max(const SparseComplexMatrix& a, const LuFactors& factors);
/// Reference single-threaded implementation of lu_residual_max.
double lu_residual_max_serial(const SparseComplexMatrix& a, const LuFactors& factors);

struct FillReport {
  Offset input_nnz = 0;
  Offset factor_nnz = 0;
  double total_entries = 0.0;
  double fill_percent = 0.0;
  double input_percent = 0.0;
};

FillReport fill_report(const SparseComplexMatrix& a, const LuFactors& factors);

}  // namespace helmdg
