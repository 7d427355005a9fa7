#include <catch_amalgamated.hpp>

#include <filesystem>
#include <random>
#include <regex>
#include <sstream>

#include "helmdg/assembly.hpp"
#include "helmdg/matrix_market.hpp"
#include "helmdg/sparse.hpp"
#include "helmdg/spy.hpp"
#include "oracles.hpp"

using namespace helmdg;

namespace {

SparseComplexMatrix tridiagonal(Index n) {
  Triplets t(n);
  for (Index i = 0; i < n; ++i) {
    t.add(i, i, {2.0, 0.1 * i});
    if (i + 1 < n) {
      t.add(i, i + 1, {-1.0, 0.0});
      t.add(i + 1, i, {-1.0, 0.0});
    }
  }
  return compress(t);
}

bool same(const SparseComplexMatrix& a, const SparseComplexMatrix& b) {
  return a.size() == b.size() && a.nnz() == b.nnz() &&
         std::equal(a.col_ptr().begin(), a.col_ptr().end(), b.col_ptr().begin()) &&
         std::equal(a.row_indices().begin(), a.row_indices().end(), b.row_indices().begin()) &&
         std::equal(a.values().begin(), a.values().end(), b.values().begin());
}

SparseComplexMatrix random_sparse(Index n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::uniform_real_distribution<double> u(-1, 1);
  Triplets t(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j || coin(rng)) t.add(i, j, {u(rng), u(rng)});
    }
  }
  return compress(t);
}

std::size_t count_matches(const std::string& s, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("compress sums duplicates and drops exact zeros", "[sparse]") {
  Triplets a(1);
  a.add(0, 0, {1, 0});
  a.add(0, 0, {2, 0});
  const auto ca = compress(a);
  REQUIRE(ca.nnz() == 1);
  CHECK(ca.coeff(0, 0) == Complex(3, 0));

  Triplets b(2);
  b.add(0, 1, {1, 0});
  b.add(0, 1, {-1, 0});
  CHECK(compress(b).nnz() == 0);

  Triplets bad(2);
  bad.add(2, 0, 1.0);
  CHECK_THROWS_AS(compress(bad), std::out_of_range);
}

TEST_CASE("compress is invariant under triplet order", "[sparse][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_sparse(25, 0.15, rng);
    Triplets t = m.to_triplets();
    auto entries = t.entries();
    std::shuffle(entries.begin(), entries.end(), rng);
    CHECK(same(compress(t), m));
    CHECK(same(compress(m.to_triplets()), m));
  }
}

TEST_CASE("CSC constructor validates its arrays", "[sparse]") {
  CHECK_THROWS_AS(SparseComplexMatrix(2, {0, 2, 2}, {1, 0}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SparseComplexMatrix(2, {0, 1}, {0}, {1.0}), std::invalid_argument);
  CHECK_NOTHROW(SparseComplexMatrix(2, {0, 1, 2}, {0, 1}, {1.0, 1.0}));
}

TEST_CASE("permutations", "[sparse]") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  const Permutation p({2, 0, 1});
  for (Index i = 0; i < 3; ++i) CHECK(p.position_of(p[i]) == i);
  CHECK(compose(p, Permutation::identity(3)) == p);

  const auto t = tridiagonal(6);
  CHECK(same(permute_symmetric(t, Permutation::identity(6)), t));
  const auto r = permute_symmetric(t, Permutation::reversal(6));
  for (Index j = 0; j < 6; ++j) {
    for (Index i : r.column_rows(j)) CHECK(std::abs(i - j) <= 1);
  }
  CHECK(r.coeff(0, 0) == t.coeff(5, 5));
  CHECK_THROWS_AS(permute_symmetric(t, Permutation::identity(5)), std::invalid_argument);
}

TEST_CASE("symmetric permutation properties", "[sparse][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 5 + trial;
    const auto a = random_sparse(n, 0.2, rng);
    const auto p = oracle::random_permutation(n, rng), q = oracle::random_permutation(n, rng);
    const auto pa = permute_symmetric(a, p);
    CHECK(pa.nnz() == a.nnz());
    for (Index k = 0; k < n; ++k) {
      for (Index l = 0; l < n; ++l) REQUIRE(pa.coeff(k, l) == a.coeff(p[k], p[l]));
    }
    CHECK(same(pa.transpose(), permute_symmetric(a.transpose(), p)));
    CHECK(same(permute_symmetric(a, compose(p, q)), permute_symmetric(permute_symmetric(a, q), p)));
  }
}

TEST_CASE("pattern graph", "[sparse]") {
  const auto d = pattern_graph(SparseComplexMatrix::identity(4));
  for (Index v = 0; v < 4; ++v) CHECK(d.degree(v) == 0);

  const auto path = pattern_graph(tridiagonal(4));
  CHECK(path.edge_count() == 3);
  CHECK(path.has_edge(0, 1));
  CHECK(path.has_edge(2, 3));
  CHECK_FALSE(path.has_edge(0, 2));

  // Unsymmetric pattern is symmetrised.
  Triplets t(3);
  t.add(0, 2, 1.0);
  const auto g = pattern_graph(compress(t));
  CHECK(g.has_edge(2, 0));
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("pattern graph degrees follow the mesh", "[sparse]") {
  const Mesh m = build_uniform_square(5);
  const auto g = pattern_graph(assemble(m, ProblemParams::defaults(5.0, 1)));
  std::vector<int> cell_neighbours(m.triangles().size(), 0);
  for (const auto& e : m.edges()) {
    if (e.kind != EdgeKind::Interior) continue;
    cell_neighbours[e.cells[0]]++;
    cell_neighbours[e.cells[1]]++;
  }
  Index max_degree = 0;
  for (Index v = 0; v < g.size(); ++v) {
    CHECK(g.degree(v) == 2 + 3 * cell_neighbours[v / 3]);
    max_degree = std::max(max_degree, g.degree(v));
  }
  CHECK(max_degree == 11);
}

TEST_CASE("graph induced and permuted", "[sparse]") {
  const auto g = oracle::grid_graph(3, 3);
  const std::vector<Index> keep{0, 1, 3, 4};
  const auto s = g.induced(keep);
  CHECK(s.size() == 4);
  CHECK(s.edge_count() == 4);
  const auto p = Permutation({8, 7, 6, 5, 4, 3, 2, 1, 0});
  const auto gp = g.permuted(p);
  for (Index u = 0; u < 9; ++u) {
    for (Index v = 0; v < 9; ++v) CHECK(gp.has_edge(u, v) == g.has_edge(p[u], p[v]));
  }
}

TEST_CASE("MatrixMarket round trip", "[sparse][io]") {
  const auto a = assemble(build_annulus_square(8, 2, 2.0), ProblemParams::defaults(5.0, 2));
  std::stringstream ss;
  write_matrix_market(ss, a);
  CHECK(ss.str().rfind("%%MatrixMarket matrix coordinate complex general\n", 0) == 0);
  const auto b = read_matrix_market(ss);
  REQUIRE(b.nnz() == a.nnz());
  CHECK(std::equal(a.row_indices().begin(), a.row_indices().end(), b.row_indices().begin()));
  for (Offset p = 0; p < a.nnz(); ++p) {
    CHECK(std::abs(a.values()[p] - b.values()[p]) <= 1e-15 * std::abs(a.values()[p]));
  }

  std::istringstream sym("%%MatrixMarket matrix coordinate real symmetric\n% c\n3 3 2\n1 1 4\n3 1 2.5\n");
  const auto s = read_matrix_market(sym);
  CHECK(s.nnz() == 3);
  CHECK(s.coeff(0, 2) == Complex(2.5));

  std::istringstream bad("%%MatrixMarket matrix array real general\n2 2\n");
  CHECK_THROWS(read_matrix_market(bad));
  std::istringstream range("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n");
  CHECK_THROWS(read_matrix_market(range));
}

TEST_CASE("permutation file round trip", "[sparse][io]") {
  std::mt19937_64 rng(8);
  const auto p = oracle::random_permutation(40, rng);
  const auto path = std::filesystem::temp_directory_path() / "helmdg_test_perm.txt";
  write_permutation(path, p);
  CHECK(read_permutation(path) == p);
  std::filesystem::remove(path);
}

TEST_CASE("spy plots", "[sparse][spy]") {
  std::ostringstream id;
  spy_svg(id, SparseComplexMatrix::identity(3));
  const std::string s = id.str();
  CHECK(s.find("nz = 3<") != std::string::npos);
  CHECK(count_matches(s, "<rect x=\"[0-9.]+\" y=\"[0-9.]+\" width=\"[0-9.]+\"") == 3);
  CHECK(s.find("class=\"frame\"") != std::string::npos);

  const auto a = assemble(build_uniform_square(5), ProblemParams::defaults(5.0, 1));
  std::ostringstream sa, sp;
  spy_svg(sa, a);
  CHECK(sa.str().find("nz = 1620<") != std::string::npos);
  std::mt19937_64 rng(3);
  spy_svg(sp, permute_symmetric(a, oracle::random_permutation(a.size(), rng)));
  CHECK(sp.str().find("nz = 1620<") != std::string::npos);

  CHECK_THROWS(spy_svg(std::filesystem::path("/nonexistent-dir/x.svg"), a));
}
