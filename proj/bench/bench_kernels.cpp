// Serial reference kernels against their OpenMP counterparts.
#include "sectordirac/partial_wave.hpp"
#include "sectordirac/radial.hpp"
#include "sectordirac/shooting.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace sectordirac;

namespace {

PolarField make_field(int nr, int nt) {
  auto g = make_grid(1e-3, 1e3, nr);
  auto f = PolarField::zeros(g, AngularGrid::uniform(pi, nt));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nt; ++j) {
      const double s = std::log((*g)[i]), t = f.theta_grid.nodes[j];
      f.at(i, j) = {std::exp(-s * s) * std::exp(I * t), cplx(std::cos(2 * t), 0.0) / (1 + s * s)};
    }
  return f;
}

RadialSample make_profile(int n) {
  auto g = make_grid(1e-6, 1e3, n);
  auto u = RadialSample::zeros(g);
  for (int i = 0; i < n; ++i) {
    const double r = (*g)[i];
    u.values[i] = {std::sin(r) / (1 + r), cplx(0.0, std::log(r))};
  }
  return u;
}

std::vector<DeficiencyTask> sweep_tasks() {
  std::vector<DeficiencyTask> tasks;
  for (double omega : {pi / 2, pi, 2 * pi})
    for (double nu : {0.0, 0.5, 1.0, 3.0})
      for (int sign : {+1, -1})
        tasks.push_back({{omega, nu}, 0, sign});
  return tasks;
}

template <bool Parallel> void BM_decompose(benchmark::State &state) {
  const auto f = make_field(static_cast<int>(state.range(0)), 513);
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? decompose(f, 8) : serial::decompose(f, 8));
}

template <bool Parallel> void BM_reconstruct(benchmark::State &state) {
  const auto f = make_field(static_cast<int>(state.range(0)), 513);
  const auto c = decompose(f, 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? reconstruct(c, f.theta_grid)
                                      : serial::reconstruct(c, f.theta_grid));
}

template <bool Parallel> void BM_apply_d(benchmark::State &state) {
  const auto u = make_profile(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? apply_d({0.4, 1.25}, u) : serial::apply_d({0.4, 1.25}, u));
}

template <bool Parallel> void BM_deficiency_sweep(benchmark::State &state) {
  const auto tasks = sweep_tasks();
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? deficiency_sweep(tasks) : serial::deficiency_sweep(tasks));
}

} // namespace

BENCHMARK(BM_decompose<false>)->Name("decompose/serial")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decompose<true>)->Name("decompose/openmp")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reconstruct<false>)->Name("reconstruct/serial")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reconstruct<true>)->Name("reconstruct/openmp")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_d<false>)->Name("apply_d/serial")->Arg(4000)->Arg(100000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_apply_d<true>)->Name("apply_d/openmp")->Arg(4000)->Arg(100000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_deficiency_sweep<false>)->Name("deficiency_sweep/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_deficiency_sweep<true>)->Name("deficiency_sweep/openmp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
