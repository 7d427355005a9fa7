#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helmdg/assembly.hpp"
#include "helmdg/report.hpp"

using namespace helmdg;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SparseComplexMatrix arrowhead_hub_first(Index n) {
  Triplets t(n);
  for (Index i = 0; i < n; ++i) {
    t.add(i, i, 10.0);
    if (i > 0) {
      t.add(i, 0, 1.0);
      t.add(0, i, 1.0);
    }
  }
  return compress(t);
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("helmdg_report_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("experiment specs", "[report]") {
  CHECK_THROWS_AS(ExperimentSpec::make(0), std::invalid_argument);
  CHECK_THROWS_AS(ExperimentSpec::make(6), std::invalid_argument);
  const auto e1 = ExperimentSpec::make(1);
  CHECK(e1.n_values == std::vector<int>{5, 10, 15, 20});
  CHECK(e1.degree() == 1);
  CHECK_FALSE(e1.analog_mesh());
  CHECK(ExperimentSpec::make(5).degree() == 2);
  CHECK(ExperimentSpec::make(2).analog_mesh());
  CHECK(ExperimentSpec::make(4).mesh_family() == "annulus");
  CHECK(ExperimentSpec::make(2).mesh_description(5) == "graded(5, 10)");
  CHECK(ExperimentSpec::make(3).build_mesh(5).count(EdgeKind::Dirichlet) == 20);
}

TEST_CASE("cell counts", "[report]") {
  const auto row = run_cell(ExperimentSpec::make(1), 5);
  CHECK(row.N == 150);
  CHECK(row.nnz_A == 1620);
  CHECK(row.total_entries() == 22500.0);
  CHECK(row.outcome(OrderingMethod::Natural).combined_nnz == 4680);
  CHECK(row.reduction(OrderingMethod::Natural) == 1.0);
  for (const auto& o : row.outcomes) {
    CHECK(o.combined_nnz == o.symbolic_nnz);
    CHECK(o.factor_residual <= 1e-12);
    CHECK(o.solve_residual <= 1e-10);
    CHECK(o.solution_error <= 1e-10);
  }
  CHECK(row.outcome(row.winner()).combined_nnz <= row.outcome(OrderingMethod::Natural).combined_nnz);

  const auto p2 = run_cell(ExperimentSpec::make(5), 10);
  CHECK(p2.nnz_A == 27360);
  CHECK(p2.total_entries() == 1.44e6);
}

TEST_CASE("percent formatting", "[report]") {
  CHECK(format_percent(7.2) == "7.2");
  CHECK(format_percent(20.8) == "21");
  CHECK(format_percent(0.864) == "0.86");
  CHECK(format_percent(9.96) == "10");
  CHECK(format_percent(0.0996) == "0.10");
  CHECK(format_percent(100.0) == "100");
  CHECK(format_percent(0.0) == "0");
  CHECK(format_factor(2.3456) == "2.35");
  CHECK(format_factor(1.0) == "1.00");
}

TEST_CASE("compare orderings", "[report]") {
  for (const auto& r : compare_orderings(SparseComplexMatrix::identity(6))) {
    CHECK(r.combined_nnz == 6);
    CHECK(r.reduction_factor == 1.0);
  }
  const Index n = 8;
  const auto ranked = compare_orderings(arrowhead_hub_first(n));
  REQUIRE(ranked.size() == 4);
  CHECK(ranked.back().method == OrderingMethod::Natural);
  CHECK(ranked.back().combined_nnz == n * n);
  for (std::size_t i = 0; i < 3; ++i) CHECK(ranked[i].combined_nnz == 3 * n - 2);
  CHECK(ranked[0].method == OrderingMethod::Amd);
  CHECK(ranked[1].method == OrderingMethod::NestedDissection);
  CHECK(ranked[2].method == OrderingMethod::Rcm);
}

TEST_CASE("experiment output files", "[report]") {
  auto spec = ExperimentSpec::make(1);
  spec.n_values = {10, 5};
  const auto dir = scratch("exp1");
  const auto report = run_experiment(spec, dir);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].n == 5);
  CHECK(report.natural_percent_decreasing());

  for (const char* f : {"counts.csv", "percent.csv", "counts.md", "percent.md", "meta.json"}) {
    CHECK(std::filesystem::exists(dir / f));
  }
  int svgs = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) svgs += e.path().extension() == ".svg";
  CHECK(svgs == 8);
  CHECK(slurp(dir / "spy_A_natural.svg").find("nz = 1620<") != std::string::npos);
  CHECK(slurp(dir / "spy_LU_natural.svg").find("nz = 4680<") != std::string::npos);

  const std::string counts = slurp(dir / "counts.csv");
  CHECK(counts.find("5,150,22500,1620,4680,") != std::string::npos);
  CHECK(counts == counts_csv(report));
  const std::string pct = slurp(dir / "percent.csv");
  CHECK(pct.find("5,150,7.2,21,") != std::string::npos);
  CHECK(pct.find(",false\n") != std::string::npos);

  const auto meta = nlohmann::json::parse(slurp(dir / "meta.json"));
  CHECK(meta["experiment"] == 1);
  CHECK(meta["p"] == 1);
  CHECK(meta["cells"].size() == 2);

  // Byte-identical on a rerun.
  const auto again = scratch("exp1_again");
  run_experiment(spec, again);
  for (const char* f : {"counts.csv", "percent.csv", "counts.md", "percent.md"}) {
    CHECK(slurp(dir / f) == slurp(again / f));
  }
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(again);
}

TEST_CASE("percent column matches the counts", "[report][property]") {
  auto spec = ExperimentSpec::make(3);
  spec.n_values = {5};
  const auto report = run_experiment(spec, {});
  const auto& r = report.rows[0];
  std::istringstream pct(percent_csv(report));
  std::string header, line;
  std::getline(pct, header);
  std::getline(pct, line);
  std::ostringstream expected;
  expected << r.n << ',' << r.N << ',' << format_percent(100.0 * r.nnz_A / r.total_entries());
  for (const auto& o : r.outcomes) expected << ',' << format_percent(100.0 * o.combined_nnz / r.total_entries());
  expected << ",true";
  CHECK(line == expected.str());
}
