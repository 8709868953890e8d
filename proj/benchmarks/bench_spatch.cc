#include <benchmark/benchmark.h>

#include "spatch/fill.hh"
#include "spatch/generator.hh"
#include "spatch/interior.hh"
#include "spatch/meshio.hh"
#include "spatch/spatch.hh"

using namespace spatch;

namespace {

SPatchNet filled_net(int n, int d, std::uint64_t seed) {
  return fill_g1(make_ribbon({.n = n, .degree = d, .seed = seed}));
}

void BM_Eval(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int d = static_cast<int>(state.range(1));
  SPatchNet net = filled_net(n, d, 1);
  DomainPolygon poly(n);
  Barycentric bary = poly.barycentric(Point2(0.11, 0.07));
  for (auto _ : state) benchmark::DoNotOptimize(net.eval(bary));
  state.SetLabel(std::to_string(net.size()) + " labels");
}
BENCHMARK(BM_Eval)->Args({5, 5})->Args({6, 5})->Args({8, 5});

void BM_G1Panels(benchmark::State& state) {
  Ribbon r = make_ribbon({.n = static_cast<int>(state.range(0)), .degree = 5, .seed = 2});
  for (auto _ : state) benchmark::DoNotOptimize(g1_panels(r));
}
BENCHMARK(BM_G1Panels)->Arg(5)->Arg(6);

void BM_InteriorSolve(benchmark::State& state) {
  Ribbon r = make_ribbon({.n = static_cast<int>(state.range(0)), .degree = 5, .seed = 3});
  PartialNet partial = g1_panels(r);
  MaskKind kind = state.range(1) == 0 ? MaskKind::Harmonic : MaskKind::Biharmonic;
  for (auto _ : state) benchmark::DoNotOptimize(solve_interior(partial, kind));
  state.SetLabel(std::to_string(partial.free_count()) + " unknowns");
}
BENCHMARK(BM_InteriorSolve)->Args({5, 0})->Args({5, 1})->Args({6, 1});

void BM_FillG1(benchmark::State& state) {
  Ribbon r = make_ribbon({.n = 6, .degree = 5, .seed = 4});
  for (auto _ : state) benchmark::DoNotOptimize(fill_g1(r));
}
BENCHMARK(BM_FillG1);

void BM_MeshPatch(benchmark::State& state) {
  SPatchNet net = filled_net(6, 5, 5);
  int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mesh_patch(net, resolution));
}
BENCHMARK(BM_MeshPatch)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
