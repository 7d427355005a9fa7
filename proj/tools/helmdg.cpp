// Command-line front end: mesh generation, assembly, reordering, LU fill
// measurement and the five experiment drivers.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "helmdg/assembly.hpp"
#include "helmdg/lu.hpp"
#include "helmdg/matrix_market.hpp"
#include "helmdg/mesh.hpp"
#include "helmdg/mesh_io.hpp"
#include "helmdg/ordering.hpp"
#include "helmdg/report.hpp"
#include "helmdg/spy.hpp"

namespace fs = std::filesystem;
using namespace helmdg;

namespace {

fs::path rhs_path(const fs::path& out) {
  fs::path p = out;
  p.replace_extension();
  return p.string() + ".rhs.mtx";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IP-DG Helmholtz matrices, fill-reducing orderings and sparse LU fill"};
  app.require_subcommand(1);

  // mesh
  std::string family = "uniform";
  int mesh_n = 5, factor = 10, layers = 1;
  double grading = 1.0;
  fs::path mesh_out;
  auto* mesh_cmd = app.add_subcommand("mesh", "Generate a triangulation");
  mesh_cmd->add_option("--family", family, "uniform | graded | annulus")
      ->check(CLI::IsMember({"uniform", "graded", "annulus"}));
  mesh_cmd->add_option("--n", mesh_n, "squares per side (annulus: nodes around the circle)")->required();
  mesh_cmd->add_option("--factor", factor, "graded: column multiplier");
  mesh_cmd->add_option("--layers", layers, "annulus: radial layers");
  mesh_cmd->add_option("--grading", grading, "annulus: outer/inner layer width ratio");
  mesh_cmd->add_option("--out", mesh_out)->required();

  // assemble
  fs::path asm_mesh, asm_out;
  int degree = 1;
  double k = 5.0;
  std::string preset;
  auto* asm_cmd = app.add_subcommand("assemble", "Assemble the IP-DG matrix of a mesh");
  asm_cmd->add_option("--mesh", asm_mesh)->required()->check(CLI::ExistingFile);
  asm_cmd->add_option("--p", degree)->check(CLI::IsMember({1, 2}));
  asm_cmd->add_option("--k", k);
  asm_cmd->add_option("--preset", preset, "right-hand side preset (planewave)")->check(CLI::IsMember({"planewave"}));
  asm_cmd->add_option("--out", asm_out)->required();

  // spy
  fs::path spy_in, spy_out;
  auto* spy_cmd = app.add_subcommand("spy", "Draw the sparsity pattern of a matrix as SVG");
  spy_cmd->add_option("--in", spy_in)->required()->check(CLI::ExistingFile);
  spy_cmd->add_option("--out", spy_out)->required();

  // permute
  fs::path perm_in, perm_file, perm_out;
  auto* perm_cmd = app.add_subcommand("permute", "Apply a symmetric permutation P A P^T");
  perm_cmd->add_option("--in", perm_in)->required()->check(CLI::ExistingFile);
  perm_cmd->add_option("--perm", perm_file)->required()->check(CLI::ExistingFile);
  perm_cmd->add_option("--out", perm_out)->required();

  // order
  fs::path ord_in, ord_out;
  std::string method = "amd";
  Index leaf = kDefaultLeafThreshold;
  auto* ord_cmd = app.add_subcommand("order", "Compute a fill-reducing ordering");
  ord_cmd->add_option("--in", ord_in)->required()->check(CLI::ExistingFile);
  ord_cmd->add_option("--method", method)->required()->check(CLI::IsMember({"amd", "nd", "rcm"}));
  ord_cmd->add_option("--leaf", leaf, "nested dissection leaf size")->check(CLI::PositiveNumber);
  ord_cmd->add_option("--out", ord_out)->required();

  // lu
  fs::path lu_in, lu_perm, lu_report, lu_spy;
  auto* lu_cmd = app.add_subcommand("lu", "Factor a matrix and report the fill of L+U-I");
  lu_cmd->add_option("--in", lu_in)->required()->check(CLI::ExistingFile);
  lu_cmd->add_option("--perm", lu_perm)->check(CLI::ExistingFile);
  lu_cmd->add_option("--report", lu_report)->required();
  lu_cmd->add_option("--spy", lu_spy);

  // experiment
  int exp_id = 1;
  std::vector<int> exp_n{5, 10, 15, 20};
  double exp_k = 5.0;
  fs::path exp_out;
  auto* exp_cmd = app.add_subcommand("experiment", "Run one of the five fill-in studies");
  exp_cmd->add_option("--id", exp_id)->required()->check(CLI::Range(1, 5));
  exp_cmd->add_option("--n", exp_n, "comma-separated n values")->delimiter(',')->check(CLI::PositiveNumber);
  exp_cmd->add_option("--k", exp_k);
  exp_cmd->add_option("--out", exp_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mesh_cmd) {
      Mesh mesh;
      if (family == "uniform") {
        mesh = build_uniform_square(mesh_n);
      } else if (family == "graded") {
        mesh = build_graded_square(mesh_n, factor);
      } else {
        mesh = build_annulus_square(mesh_n, layers, grading);
      }
      write_mesh(mesh_out, mesh);
      std::printf("%zu triangles, %zu edges -> %s\n", mesh.triangles().size(), mesh.edges().size(),
                  mesh_out.c_str());
    } else if (*asm_cmd) {
      const Mesh mesh = read_mesh(asm_mesh);
      ProblemParams params = ProblemParams::defaults(k, degree);
      const SparseComplexMatrix a = assemble(mesh, params);
      write_matrix_market(asm_out, a);
      std::printf("N = %d, nnz = %lld -> %s\n", a.size(), static_cast<long long>(a.nnz()), asm_out.c_str());
      if (preset == "planewave") {
        set_planewave_sources(params);
        const fs::path rhs = rhs_path(asm_out);
        write_vector_market(rhs, assemble_rhs(mesh, params).values);
        std::printf("right-hand side -> %s\n", rhs.c_str());
      }
    } else if (*spy_cmd) {
      const SparseComplexMatrix a = read_matrix_market(spy_in);
      spy_svg(spy_out, a, spy_in.filename().string());
    } else if (*perm_cmd) {
      const SparseComplexMatrix a = read_matrix_market(perm_in);
      write_matrix_market(perm_out, permute_symmetric(a, read_permutation(perm_file)));
    } else if (*ord_cmd) {
      const SparseComplexMatrix a = read_matrix_market(ord_in);
      const Permutation p = compute_ordering(pattern_graph(a), method_from_name(method), leaf);
      write_permutation(ord_out, p);
      const auto bp = bandwidth_profile(permute_symmetric(a, p));
      std::printf("%s: bandwidth %d, profile %lld -> %s\n", method.c_str(), bp.bandwidth,
                  static_cast<long long>(bp.profile), ord_out.c_str());
    } else if (*lu_cmd) {
      SparseComplexMatrix a = read_matrix_market(lu_in);
      if (!lu_perm.empty()) a = permute_symmetric(a, read_permutation(lu_perm));
      const LuFactors f = lu_numeric(a);
      const FillReport r = fill_report(a, f);
      std::ofstream out(lu_report);
      if (!out) throw std::runtime_error("cannot open " + lu_report.string());
      char pct[32];
      std::snprintf(pct, sizeof pct, "%.6g", r.fill_percent);
      out << "N,total_entries,nnz_A,nnz_LU,fill_percent\n"
          << a.size() << ',' << static_cast<Offset>(a.size()) * a.size() << ',' << r.input_nnz << ','
          << r.factor_nnz << ',' << pct << '\n';
      if (!lu_spy.empty()) spy_svg(lu_spy, combined_factor(f), "L+U-I");
      std::printf("nnz(L+U-I) = %lld (%s%%)\n", static_cast<long long>(r.factor_nnz),
                  format_percent(r.fill_percent).c_str());
    } else if (*exp_cmd) {
      ExperimentSpec spec = ExperimentSpec::make(exp_id);
      spec.n_values = exp_n;
      spec.k = exp_k;
      const ExperimentReport report = run_experiment(spec, exp_out);
      std::cout << counts_markdown(report) << '\n' << percent_markdown(report);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "helmdg: %s\n", e.what());
    return 1;
  }
  return 0;
}
