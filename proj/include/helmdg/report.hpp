#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "helmdg/lu.hpp"
#include "helmdg/mesh.hpp"
#include "helmdg/ordering.hpp"

namespace helmdg {

/// One of the five studies: mesh family, polynomial degree and n values.
struct ExperimentSpec {
  int id = 1;
  std::vector<int> n_values{5, 10, 15, 20};
  double k = 5.0;

  /// Throws std::invalid_argument unless 1 <= id <= 5.
  static ExperimentSpec make(int id);

  int degree() const { return id == 5 ? 2 : 1; }
  /// True for the graded and annulus families, which stand in for the
  /// unstructured meshes of experiments 2-4.
  bool analog_mesh() const { return id >= 2 && id <= 4; }
  std::string mesh_family() const;
  /// Builder call for a given n, e.g. "annulus(20, 1, 1)".
  std::string mesh_description(int n) const;
  Mesh build_mesh(int n) const;
};

inline constexpr std::array<OrderingMethod, 4> kAllMethods{OrderingMethod::Natural, OrderingMethod::Amd,
                                                           OrderingMethod::NestedDissection, OrderingMethod::Rcm};

struct OrderingOutcome {
  OrderingMethod method = OrderingMethod::Natural;
  Offset combined_nnz = 0;
  Offset symbolic_nnz = 0;
  /// ‖PAPᵀ - LU‖_max / ‖A‖_max.
  double factor_residual = 0.0;
  /// ‖Ax - b‖_∞ / ‖b‖_∞ for b = A·1.
  double solve_residual = 0.0;
  /// max |x - 1| for the same system.
  double solution_error = 0.0;
  BandwidthProfile shape;
};

struct ExperimentRow {
  int n = 0;
  Index N = 0;
  Offset nnz_A = 0;
  std::array<OrderingOutcome, 4> outcomes;  // indexed like kAllMethods

  double total_entries() const { return static_cast<double>(N) * static_cast<double>(N); }
  const OrderingOutcome& outcome(OrderingMethod m) const;
  /// nnz_LU(natural) / nnz_LU(method).
  double reduction(OrderingMethod m) const;
  /// Method with the fewest combined entries; earlier in kAllMethods wins ties.
  OrderingMethod winner() const;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<ExperimentRow> rows;  // ascending n

  /// Whether the natural-order fill percentage strictly decreases with n.
  bool natural_percent_decreasing() const;
};

struct CellOptions {
  /// Directory for the eight spy plots; empty skips them.
  std::filesystem::path spy_dir;
};

/// Builds, assembles, orders and factors one (experiment, n) cell.
/// A ZeroPivot is rethrown with the experiment, n and ordering named.
ExperimentRow run_cell(const ExperimentSpec& spec, int n, const CellOptions& options = {});

/// Runs every n (cells in parallel), then writes counts.csv, percent.csv,
/// counts.md, percent.md, meta.json and, for the smallest n, spy_*.svg.
/// An empty out_dir skips all output.
ExperimentReport run_experiment(const ExperimentSpec& spec, const std::filesystem::path& out_dir);

struct RankedOrdering {
  OrderingMethod method = OrderingMethod::Natural;
  Offset combined_nnz = 0;
  double reduction_factor = 1.0;
};

/// Symbolic fill of each ordering, best first; ties keep kAllMethods order.
std::vector<RankedOrdering> compare_orderings(const SparseComplexMatrix& a);

/// Two significant digits, fixed notation: 20.8 -> "21", 0.864 -> "0.86".
std::string format_percent(double value);
/// Two decimals: 2.3456 -> "2.35".
std::string format_factor(double value);

std::string counts_csv(const ExperimentReport& report);
std::string percent_csv(const ExperimentReport& report);
std::string counts_markdown(const ExperimentReport& report);
std::string percent_markdown(const ExperimentReport& report);
std::string meta_json(const ExperimentReport& report);

}  // namespace helmdg
