#include <catch_amalgamated.hpp>

#include <random>

#include "helmdg/assembly.hpp"
#include "helmdg/lu.hpp"
#include "helmdg/ordering.hpp"
#include "oracles.hpp"

using namespace helmdg;

namespace {

SparseComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows) {
  Triplets t(static_cast<Index>(rows.size()));
  for (Index i = 0; i < static_cast<Index>(rows.size()); ++i) {
    for (Index j = 0; j < static_cast<Index>(rows[i].size()); ++j) {
      if (rows[i][j] != Complex(0.0)) t.add(i, j, rows[i][j]);
    }
  }
  return compress(t);
}

SparseComplexMatrix arrowhead(Index n, bool hub_first) {
  const Index hub = hub_first ? 0 : n - 1;
  Triplets t(n);
  for (Index i = 0; i < n; ++i) {
    t.add(i, i, static_cast<double>(n + 1));
    if (i != hub) {
      t.add(i, hub, 1.0);
      t.add(hub, i, 1.0);
    }
  }
  return compress(t);
}

double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("symbolic fill examples", "[lu][symbolic]") {
  CHECK(symbolic_fill(oracle::path_graph(5), Permutation::identity(5)) == 13);
  const auto hub_first = oracle::star_graph(4, 0);
  CHECK(symbolic_fill(hub_first, Permutation::identity(5)) == 25);
  const auto hub_last = oracle::star_graph(4, 4);
  CHECK(symbolic_fill(hub_last, Permutation::identity(5)) == 13);
}

TEST_CASE("symbolic fill agrees with graph elimination", "[lu][symbolic][property]") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + trial % 40;
    const auto g = oracle::random_graph(n, 2.5 / n, rng);
    const auto p = oracle::random_permutation(n, rng);
    INFO("trial " << trial);
    REQUIRE(symbolic_fill(g, p) == oracle::elimination_fill(g, p));
  }
}

TEST_CASE("lu of small matrices", "[lu]") {
  const auto id = lu_numeric(SparseComplexMatrix::identity(4));
  CHECK(id.L.nnz() == 0);
  CHECK(id.U.nnz() == 4);
  CHECK(id.combined_nnz == 4);

  const auto a = from_rows({{2, 1}, {1, 2}});
  const auto f = lu_numeric(a);
  CHECK(f.L.coeff(1, 0) == Complex(0.5));
  CHECK(f.U.coeff(0, 0) == Complex(2.0));
  CHECK(f.U.coeff(0, 1) == Complex(1.0));
  CHECK(f.U.coeff(1, 1) == Complex(1.5));
  CHECK(f.U.coeff(1, 0) == Complex(0.0));
  CHECK(f.combined_nnz == 4);
  const auto x = solve(f, {3.0, 3.0});
  CHECK(std::abs(x[0] - 1.0) < 1e-15);
  CHECK(std::abs(x[1] - 1.0) < 1e-15);
  CHECK_THROWS_AS(solve(f, {1.0}), std::invalid_argument);
}

TEST_CASE("arrowhead fill", "[lu]") {
  CHECK(lu_numeric(arrowhead(5, true)).combined_nnz == 25);
  CHECK(lu_numeric(arrowhead(5, false)).combined_nnz == 13);
}

TEST_CASE("numeric factor count equals symbolic prediction on a DG matrix", "[lu]") {
  const auto a = assemble(build_uniform_square(5), ProblemParams::defaults(5.0, 1));
  const auto g = pattern_graph(a);
  for (OrderingMethod m : {OrderingMethod::Natural, OrderingMethod::Amd, OrderingMethod::NestedDissection,
                           OrderingMethod::Rcm}) {
    const auto p = compute_ordering(g, m);
    const auto f = lu_numeric(permute_symmetric(a, p));
    INFO(method_name(m));
    CHECK(f.combined_nnz == symbolic_fill(g, p));
  }
  CHECK(lu_numeric(a).combined_nnz == 4680);
}

TEST_CASE("sparse LU matches dense elimination", "[lu][property]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 2 + (trial * 7) % 59;
    const auto g = oracle::random_graph(n, 3.0 / n, rng);
    const auto a = oracle::random_symmetric_matrix(g, rng);
    const auto f = lu_numeric(a);
    const auto d = oracle::dense_lu(oracle::to_dense(a));
    double scale = 0.0;
    for (const auto& z : d.a) scale = std::max(scale, std::abs(z));
    double err = 0.0;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        const Complex mine = i > j ? f.L.coeff(i, j) : f.U.coeff(i, j);
        err = std::max(err, std::abs(mine - d(i, j)));
      }
    }
    INFO("n = " << n);
    CHECK(err <= 1e-12 * scale);
    CHECK(f.combined_nnz == symbolic_fill(g, Permutation::identity(n)));
  }
}

TEST_CASE("zero pivots are reported", "[lu]") {
  const auto a = from_rows({{0, 1}, {1, 0}});
  try {
    lu_numeric(a);
    FAIL("expected ZeroPivot");
  } catch (const ZeroPivot& e) {
    CHECK(e.column() == 0);
    CHECK(e.magnitude() == 0.0);
  }
  // Structurally present, numerically vanishing after one step.
  const auto b = from_rows({{1, 1}, {1, 1}});
  CHECK_THROWS_AS(lu_numeric(b), ZeroPivot);

  LuOptions pivoting;
  pivoting.threshold_pivoting = true;
  const auto f = lu_numeric(a, pivoting);
  CHECK(f.row_order == std::vector<Index>{1, 0});
  const auto x = solve(f, {2.0, 3.0});
  CHECK(std::abs(x[0] - 3.0) < 1e-15);
  CHECK(std::abs(x[1] - 2.0) < 1e-15);
  CHECK(lu_residual_max(a, f) == 0.0);
}

TEST_CASE("solutions do not depend on the ordering", "[lu][property]") {
  std::mt19937_64 rng(23);
  const auto a = assemble(build_annulus_square(12, 2, 2.0), ProblemParams::defaults(5.0, 1));
  std::vector<Complex> b(a.size());
  std::uniform_real_distribution<double> u(-1, 1);
  for (auto& z : b) z = {u(rng), u(rng)};
  const auto x0 = solve(lu_numeric(a), b);
  const auto ax = a.multiply(x0);
  CHECK(max_abs_diff(ax, b) < 1e-10);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = oracle::random_permutation(a.size(), rng);
    std::vector<Complex> pb(b.size());
    for (Index k = 0; k < a.size(); ++k) pb[k] = b[p[k]];
    const auto y = solve(lu_numeric(permute_symmetric(a, p)), pb);
    std::vector<Complex> x(b.size());
    for (Index k = 0; k < a.size(); ++k) x[p[k]] = y[k];
    CHECK(max_abs_diff(x, x0) < 1e-9);
  }
}

TEST_CASE("residual kernels", "[lu]") {
  const auto a = assemble(build_uniform_square(8), ProblemParams::defaults(5.0, 2));
  const auto p = amd(pattern_graph(a));
  const auto pa = permute_symmetric(a, p);
  const auto f = lu_numeric(pa);
  const double r = lu_residual_max(pa, f);
  CHECK(r == lu_residual_max_serial(pa, f));
  CHECK(r <= 1e-12 * pa.max_abs());
}

TEST_CASE("fill report", "[lu]") {
  const auto id = fill_report(SparseComplexMatrix::identity(10), lu_numeric(SparseComplexMatrix::identity(10)));
  CHECK(id.total_entries == 100.0);
  CHECK(id.fill_percent == Catch::Approx(10.0));
  CHECK(id.input_percent == Catch::Approx(10.0));

  const auto arrow = arrowhead(5, true);
  const auto r = fill_report(arrow, lu_numeric(arrow));
  CHECK(r.input_nnz == 13);
  CHECK(r.factor_nnz == 25);
  CHECK(r.fill_percent == Catch::Approx(100.0));

  const auto c = combined_factor(lu_numeric(arrow));
  CHECK(c.nnz() == 25);
}
