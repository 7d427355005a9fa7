// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <map>

#include "helmdg/assembly.hpp"
#include "helmdg/lu.hpp"
#include "helmdg/ordering.hpp"

using namespace helmdg;

namespace {

const Mesh& mesh(int n) {
  static const Mesh m10 = build_uniform_square(10), m20 = build_uniform_square(20), m40 = build_uniform_square(40);
  return n == 10 ? m10 : n == 20 ? m20 : m40;
}

template <bool Parallel>
void BM_Assemble(benchmark::State& state) {
  const Mesh& m = mesh(static_cast<int>(state.range(0)));
  const auto params = ProblemParams::defaults(5.0, static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto a = Parallel ? assemble(m, params) : assemble_serial(m, params);
    benchmark::DoNotOptimize(a.nnz());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.triangles().size()));
}

struct Factored {
  SparseComplexMatrix a;
  LuFactors f;
};

const Factored& factored(int n) {
  static std::map<int, Factored> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    const auto a = assemble(mesh(n), ProblemParams::defaults(5.0, 1));
    auto pa = permute_symmetric(a, amd(pattern_graph(a)));
    auto f = lu_numeric(pa);
    it = cache.emplace(n, Factored{std::move(pa), std::move(f)}).first;
  }
  return it->second;
}

template <bool Parallel>
void BM_Residual(benchmark::State& state) {
  const auto& c = factored(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const double r = Parallel ? lu_residual_max(c.a, c.f) : lu_residual_max_serial(c.a, c.f);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_Assemble<false>)
    ->Name("assemble/serial")
    ->Args({20, 1})
    ->Args({40, 1})
    ->Args({20, 2})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Assemble<true>)
    ->Name("assemble/openmp")
    ->Args({20, 1})
    ->Args({40, 1})
    ->Args({20, 2})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Residual<false>)->Name("lu_residual/serial")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Residual<true>)->Name("lu_residual/openmp")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
