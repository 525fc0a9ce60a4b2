#include <benchmark/benchmark.h>

#include <cmath>

#include "burgeon/catalog.hpp"
#include "burgeon/classify.hpp"
#include "burgeon/godunov.hpp"
#include "burgeon/quadrature.hpp"
#include "burgeon/singular.hpp"
#include "burgeon/transform.hpp"

using namespace burgeon;

static void BM_IntegrateCurve(benchmark::State& state) {
  auto f = [](double s) { return 1.0 / std::sqrt(s * s + 1.0); };
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_curve(f, 0.0, 5.0, tol));
  }
}
BENCHMARK(BM_IntegrateCurve)->Arg(6)->Arg(10)->Arg(12);

static void BM_TransformValue(benchmark::State& state) {
  const EikonalField u = transform_simple(cone_induced_solution({0.0, 2.0}),
                                          GraphCurve::sine(0.5, 0.1, 1.0, 1), 0.0, 1.0);
  double x = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(u.value(x, 0.7)); // cold column each iteration
    x += 1e-7;
  }
}
BENCHMARK(BM_TransformValue);

static void BM_TransformValueCachedColumn(benchmark::State& state) {
  const EikonalField u = transform_simple(cone_induced_solution({0.0, 2.0}),
                                          GraphCurve::sine(0.5, 0.1, 1.0, 1), 0.0, 1.0);
  u.value(1.0, 0.7); // warm the column cache
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(u.value(1.0, t));
    t = t < 1.0 ? t + 1e-7 : 0.0;
  }
}
BENCHMARK(BM_TransformValueCachedColumn);

static void BM_GodunovStep(benchmark::State& state) {
  FVState s;
  const int n = static_cast<int>(state.range(0));
  s.u.resize(n);
  for (int i = 0; i < n; ++i) s.u[i] = std::sin(0.01 * i);
  s.x_lo = 0.0;
  s.dx = 0.01;
  s.data_min = -1.0;
  s.data_max = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(godunov_step(s));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_GodunovStep)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 17);

static void BM_BoxCount(benchmark::State& state) {
  std::vector<std::pair<double, double>> pts;
  const int n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / n;
    pts.emplace_back(s, 0.5 * s);
  }
  const std::vector<double> sched = {0.32, 0.16, 0.08, 0.04};
  for (auto _ : state) {
    benchmark::DoNotOptimize(box_count(pts, sched));
  }
}
BENCHMARK(BM_BoxCount)->Arg(1000)->Arg(10000);

static void BM_ClassifyAffine(benchmark::State& state) {
  std::vector<std::array<double, 3>> pts;
  for (int j = 0; j < 41; ++j)
    for (int i = 0; i < 41; ++i) {
      const double x = -5.0 + 0.25 * i, t = -5.0 + 0.25 * j;
      pts.push_back({x, t, (3.0 * x + t) / std::sqrt(10.0)});
    }
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(pts));
  }
}
BENCHMARK(BM_ClassifyAffine);

static void BM_ClassifyCone(benchmark::State& state) {
  std::vector<std::array<double, 3>> pts;
  for (int j = 0; j < 41; ++j)
    for (int i = 0; i < 41; ++i) {
      const double x = -5.0 + 0.25 * i, t = -5.0 + 0.25 * j;
      pts.push_back({x, t, std::sqrt((x - 1) * (x - 1) + (t - 2) * (t - 2))});
    }
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(pts));
  }
}
BENCHMARK(BM_ClassifyCone);

BENCHMARK_MAIN();
