#include <benchmark/benchmark.h>

#include "aalpha/closedform.hpp"
#include "aalpha/construct.hpp"
#include "aalpha/exact.hpp"
#include "aalpha/spectra.hpp"
#include "aalpha/verify.hpp"

using namespace aalpha;

namespace {

Graph petersen_join() { return central_vertex_join(generate(Family::petersen), generate(Family::cycle, {5})); }

// Oracle path: dense eigensolve of the explicit join matrix.
void BM_EigensolveJoin(benchmark::State& state) {
  const auto m = a_alpha_matrix(petersen_join(), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_sym(m));
}
BENCHMARK(BM_EigensolveJoin);

// Closed-form path for the same spectrum.
void BM_ClosedFormJoin(benchmark::State& state) {
  const Graph g1 = generate(Family::petersen), g2 = generate(Family::cycle, {5});
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_cvjoin_regular(g1, g2, 0.5));
}
BENCHMARK(BM_ClosedFormJoin);

void BM_ClosedFormCentral(benchmark::State& state) {
  const Graph g = generate(Family::complete, {state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_central_regular(g, 0.25));
}
BENCHMARK(BM_ClosedFormCentral)->Arg(8)->Arg(16)->Arg(32);

void BM_EigensolveCentral(benchmark::State& state) {
  const auto m = a_alpha_matrix(central_graph(generate(Family::complete, {state.range(0)})), 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_sym(m));
}
BENCHMARK(BM_EigensolveCentral)->Arg(8)->Arg(16)->Arg(32);

// Exact certificate used by the cospectral construction.
void BM_ExactCharPolyCospectralJoin(benchmark::State& state) {
  const auto m = a_alpha_matrix(
      central_vertex_join(generate(Family::shrikhande), generate(Family::complete_bipartite, {2, 3})), Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(exact_char_poly(m));
}
BENCHMARK(BM_ExactCharPolyCospectralJoin)->Unit(benchmark::kMillisecond);

void BM_DefaultSweep(benchmark::State& state) {
  const auto catalog = default_catalog();
  const auto grid = default_alpha_grid();
  for (auto _ : state) benchmark::DoNotOptimize(sweep(catalog, grid, SweepOptions{static_cast<unsigned>(state.range(0))}));
}
BENCHMARK(BM_DefaultSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
