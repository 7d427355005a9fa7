#include "helmdg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "helmdg/assembly.hpp"
#include "helmdg/spy.hpp"

namespace helmdg {

namespace {

std::size_t method_slot(OrderingMethod m) {
  for (std::size_t s = 0; s < kAllMethods.size(); ++s) {
    if (kAllMethods[s] == m) return s;
  }
  throw std::invalid_argument("unknown ordering method");
}

// At least two layers, so the ring has interior vertices like the
// unstructured meshes it stands in for.
int annulus_layers(int id, int n) {
  if (id == 3) return std::max(2, static_cast<int>(std::lround(n / 5.0)));
  return std::max(1, static_cast<int>(std::ceil(2.0 * n / 5.0)));
}

double percent(Offset count, double total) { return total > 0 ? 100.0 * static_cast<double>(count) / total : 0.0; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  // Write to a sibling and rename so readers never see a partial file.
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

ExperimentSpec ExperimentSpec::make(int id) {
  if (id < 1 || id > 5) throw std::invalid_argument("experiment id must be in 1..5, got " + std::to_string(id));
  ExperimentSpec s;
  s.id = id;
  return s;
}

std::string ExperimentSpec::mesh_family() const {
  switch (id) {
    case 1:
    case 5: return "uniform";
    case 2: return "graded";
    default: return "annulus";
  }
}

std::string ExperimentSpec::mesh_description(int n) const {
  switch (id) {
    case 1:
    case 5: return "uniform(" + std::to_string(n) + ")";
    case 2: return "graded(" + std::to_string(n) + ", 10)";
    case 3: return "annulus(" + std::to_string(4 * n) + ", " + std::to_string(annulus_layers(3, n)) + ", 1)";
    case 4: return "annulus(" + std::to_string(12 * n) + ", " + std::to_string(annulus_layers(4, n)) + ", 4)";
    default: throw std::invalid_argument("experiment id must be in 1..5");
  }
}

Mesh ExperimentSpec::build_mesh(int n) const {
  if (n < 1) throw std::invalid_argument("n must be positive");
  switch (id) {
    case 1:
    case 5: return build_uniform_square(n);
    case 2: return build_graded_square(n, 10);
    case 3: return build_annulus_square(4 * n, annulus_layers(3, n), 1.0);
    case 4: return build_annulus_square(12 * n, annulus_layers(4, n), 4.0);
    default: throw std::invalid_argument("experiment id must be in 1..5");
  }
}

const OrderingOutcome& ExperimentRow::outcome(OrderingMethod m) const { return outcomes[method_slot(m)]; }

double ExperimentRow::reduction(OrderingMethod m) const {
  return static_cast<double>(outcome(OrderingMethod::Natural).combined_nnz) /
         static_cast<double>(outcome(m).combined_nnz);
}

OrderingMethod ExperimentRow::winner() const {
  std::size_t best = 0;
  for (std::size_t s = 1; s < outcomes.size(); ++s) {
    if (outcomes[s].combined_nnz < outcomes[best].combined_nnz) best = s;
  }
  return kAllMethods[best];
}

bool ExperimentReport::natural_percent_decreasing() const {
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double prev = percent(rows[r - 1].outcome(OrderingMethod::Natural).combined_nnz, rows[r - 1].total_entries());
    const double cur = percent(rows[r].outcome(OrderingMethod::Natural).combined_nnz, rows[r].total_entries());
    if (!(cur < prev)) return false;
  }
  return true;
}

ExperimentRow run_cell(const ExperimentSpec& spec, int n, const CellOptions& options) {
  const Mesh mesh = spec.build_mesh(n);
  const SparseComplexMatrix a = assemble(mesh, ProblemParams::defaults(spec.k, spec.degree()));
  const AdjacencyGraph graph = pattern_graph(a);
  const double a_max = a.max_abs();

  ExperimentRow row;
  row.n = n;
  row.N = a.size();
  row.nnz_A = a.nnz();

  for (std::size_t s = 0; s < kAllMethods.size(); ++s) {
    const OrderingMethod method = kAllMethods[s];
    const Permutation perm = compute_ordering(graph, method);
    const SparseComplexMatrix pa = permute_symmetric(a, perm);

    OrderingOutcome& out = row.outcomes[s];
    out.method = method;
    out.symbolic_nnz = symbolic_fill(graph, perm);
    out.shape = bandwidth_profile(pa);

    LuOptions lu_options;
    lu_options.reserve_hint = out.symbolic_nnz;
    LuFactors f;
    try {
      f = lu_numeric(pa, lu_options);
    } catch (const ZeroPivot& e) {
      throw ZeroPivot(e.column(), e.magnitude(),
                      "experiment " + std::to_string(spec.id) + ", n = " + std::to_string(n) + ", ordering " +
                          std::string(method_name(method)));
    }
    out.combined_nnz = f.combined_nnz;
    out.factor_residual = lu_residual_max(pa, f) / a_max;

    const std::vector<Complex> ones(pa.size(), Complex(1.0, 0.0));
    const std::vector<Complex> b = pa.multiply(ones);
    const std::vector<Complex> x = solve(f, b);
    const std::vector<Complex> ax = pa.multiply(x);
    double res = 0.0, bnorm = 0.0, err = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      res = std::max(res, std::abs(ax[i] - b[i]));
      bnorm = std::max(bnorm, std::abs(b[i]));
      err = std::max(err, std::abs(x[i] - ones[i]));
    }
    out.solve_residual = bnorm > 0 ? res / bnorm : res;
    out.solution_error = err;

    if (!options.spy_dir.empty()) {
      const std::string name(method_name(method));
      spy_svg(options.spy_dir / ("spy_A_" + name + ".svg"), pa, "A, " + name + " ordering");
      spy_svg(options.spy_dir / ("spy_LU_" + name + ".svg"), combined_factor(f), "L+U-I, " + name + " ordering");
    }
  }
  return row;
}

ExperimentReport run_experiment(const ExperimentSpec& spec, const std::filesystem::path& out_dir) {
  if (spec.n_values.empty()) throw std::invalid_argument("run_experiment: no n values");
  ExperimentReport report;
  report.spec = spec;
  std::vector<int> ns = spec.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  report.spec.n_values = ns;

  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

  const int cells = static_cast<int>(ns.size());
  std::vector<ExperimentRow> rows(cells);
  std::vector<std::exception_ptr> errors(cells);
  // Largest cells first so a long one does not start last.
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = cells - 1; c >= 0; --c) {
    try {
      CellOptions options;
      if (c == 0 && !out_dir.empty()) options.spy_dir = out_dir;
      rows[c] = run_cell(spec, ns[c], options);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  report.rows = std::move(rows);

  if (!out_dir.empty()) {
    write_text(out_dir / "counts.csv", counts_csv(report));
    write_text(out_dir / "percent.csv", percent_csv(report));
    write_text(out_dir / "counts.md", counts_markdown(report));
    write_text(out_dir / "percent.md", percent_markdown(report));
    write_text(out_dir / "meta.json", meta_json(report));
  }
  return report;
}

std::vector<RankedOrdering> compare_orderings(const SparseComplexMatrix& a) {
  const AdjacencyGraph g = pattern_graph(a);
  std::vector<RankedOrdering> out;
  for (OrderingMethod m : kAllMethods) out.push_back({m, symbolic_fill(g, compute_ordering(g, m)), 1.0});
  const double base = static_cast<double>(out.front().combined_nnz);
  for (auto& r : out) r.reduction_factor = base / static_cast<double>(r.combined_nnz);
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedOrdering& l, const RankedOrdering& r) { return l.combined_nnz < r.combined_nnz; });
  return out;
}

std::string format_percent(double value) {
  if (!std::isfinite(value)) return "nan";
  if (value == 0.0) return "0";
  char buf[64];
  int decimals = std::max(0, 1 - static_cast<int>(std::floor(std::log10(std::abs(value)))));
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  // 9.96 rounds to 10.0; drop the now-third significant digit.
  const double rounded = std::abs(std::strtod(buf, nullptr));
  if (decimals > 0 && rounded >= std::pow(10.0, 2 - decimals)) {
    std::snprintf(buf, sizeof buf, "%.*f", decimals - 1, value);
  }
  return buf;
}

std::string format_factor(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::string counts_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "n,N,total_entries,nnz_A,nnz_LU_natural,nnz_LU_amd,nnz_LU_nd,nnz_LU_rcm,"
         "factor_amd,factor_nd,factor_rcm,analog_mesh\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.N << ',' << static_cast<Offset>(r.N) * r.N << ',' << r.nnz_A;
    for (const auto& o : r.outcomes) out << ',' << o.combined_nnz;
    for (std::size_t s = 1; s < kAllMethods.size(); ++s) out << ',' << format_factor(r.reduction(kAllMethods[s]));
    out << ',' << (report.spec.analog_mesh() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string percent_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "n,N,pct_A,pct_LU_natural,pct_LU_amd,pct_LU_nd,pct_LU_rcm,analog_mesh\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.N << ',' << format_percent(percent(r.nnz_A, r.total_entries()));
    for (const auto& o : r.outcomes) out << ',' << format_percent(percent(o.combined_nnz, r.total_entries()));
    out << ',' << (report.spec.analog_mesh() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string counts_markdown(const ExperimentReport& report) {
  std::ostringstream out;
  out << "Experiment " << report.spec.id << ": nonzero entries (p = " << report.spec.degree()
      << ", k = " << report.spec.k << ", mesh " << report.spec.mesh_family()
      << (report.spec.analog_mesh() ? ", analog" : "") << ")\n\n";
  out << "| n | N | Total entries | A | LU | AMD | ND | RCM |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : report.rows) {
    out << "| " << r.n << " | " << r.N << " | " << static_cast<Offset>(r.N) * r.N << " | " << r.nnz_A;
    for (const auto& o : r.outcomes) out << " | " << o.combined_nnz;
    out << " |\n";
  }
  out << "\nReduction factors versus natural order:\n\n| n | AMD | ND | RCM |\n|---|---|---|---|\n";
  for (const auto& r : report.rows) {
    out << "| " << r.n;
    for (std::size_t s = 1; s < kAllMethods.size(); ++s) out << " | " << format_factor(r.reduction(kAllMethods[s]));
    out << " |\n";
  }
  return out.str();
}

std::string percent_markdown(const ExperimentReport& report) {
  std::ostringstream out;
  out << "Experiment " << report.spec.id << ": percentage of nonzero entries\n\n";
  out << "| n | A | LU | AMD | ND | RCM |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& r : report.rows) {
    out << "| " << r.n << " | " << format_percent(percent(r.nnz_A, r.total_entries())) << '%';
    for (const auto& o : r.outcomes) out << " | " << format_percent(percent(o.combined_nnz, r.total_entries())) << '%';
    out << " |\n";
  }
  return out.str();
}

std::string meta_json(const ExperimentReport& report) {
  using nlohmann::ordered_json;
  const ExperimentSpec& spec = report.spec;
  ordered_json j;
  j["tool"] = "helmdg";
  j["version"] = HELMDG_VERSION;
  j["experiment"] = spec.id;
  j["k"] = spec.k;
  j["p"] = spec.degree();
  j["n_values"] = spec.n_values;
  j["mesh_family"] = spec.mesh_family();
  j["analog_mesh"] = spec.analog_mesh();
  j["ordering_defaults"] = {{"nd_leaf_threshold", kDefaultLeafThreshold}, {"tie_break", "lowest index"}};
  j["lu"] = {{"pivoting", "none"}, {"pivot_tolerance", LuOptions{}.pivot_tolerance}};
  ordered_json cells = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json c;
    c["n"] = r.n;
    c["mesh"] = spec.mesh_description(r.n);
    c["N"] = r.N;
    c["nnz_A"] = r.nnz_A;
    c["winner"] = std::string(method_name(r.winner()));
    ordered_json per = ordered_json::object();
    for (const auto& o : r.outcomes) {
      char res[32], sol[32];
      std::snprintf(res, sizeof res, "%.1e", o.factor_residual);
      std::snprintf(sol, sizeof sol, "%.1e", o.solve_residual);
      per[std::string(method_name(o.method))] = {{"nnz_LU", o.combined_nnz},
                                                 {"symbolic_nnz", o.symbolic_nnz},
                                                 {"reduction_factor", format_factor(r.reduction(o.method))},
                                                 {"bandwidth", o.shape.bandwidth},
                                                 {"profile", o.shape.profile},
                                                 {"factor_residual", res},
                                                 {"solve_residual", sol}};
    }
    c["orderings"] = per;
    cells.push_back(c);
  }
  j["cells"] = cells;
  j["natural_percent_strictly_decreasing"] = report.natural_percent_decreasing();
  if (spec.id == 2) {
    j["notes"] =
        "The reference tables for this study are non-monotone in n (unstructured meshes); the structured analog "
        "is expected to be monotone. See natural_percent_strictly_decreasing.";
  }
  return j.dump(2) + "\n";
}

}  // namespace helmdg
