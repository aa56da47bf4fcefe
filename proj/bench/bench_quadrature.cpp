#include <benchmark/benchmark.h>

#include "gcrys/whittaker/whittaker.hpp"

using namespace gcrys::wh;

namespace {

struct Setup {
  ExpAffineSum f;
  LogGrid g;
  double shift;
};

Setup make(int n, int points) {
  std::vector<double> mu(n + 1), t(n + 1);
  for (int i = 0; i <= n; ++i) {
    mu[i] = 0.3 - 0.2 * i;
    t[i] = 1.0 + 0.25 * i;
  }
  ExpAffineSum f = whittaker_integrand(mu, t);
  Maximum m = maximize(f, Eigen::VectorXd::Zero(f.dim()));
  QuadSpec spec;
  spec.points_per_dim = points;
  LogGrid g = auto_grid(f, m.u, m.log_peak, spec);
  return {f, g, m.log_peak};
}

void BM_serial(benchmark::State& st) {
  Setup s = make(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(trapezoid_serial(s.f, s.g, s.shift));
  st.counters["nodes"] = static_cast<double>(s.g.node_count());
}

void BM_omp(benchmark::State& st) {
  Setup s = make(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(trapezoid_omp(s.f, s.g, s.shift));
  st.counters["nodes"] = static_cast<double>(s.g.node_count());
}

void BM_psi(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::vector<double> mu(n + 1, 0.1), t(n + 1, 1.0);
  for (auto _ : st) benchmark::DoNotOptimize(psi(mu, t));
}

}  // namespace

// GL_3 (3 dims) and GL_4 (6 dims)
BENCHMARK(BM_serial)->Args({2, 41})->Args({3, 11})->Args({3, 15})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_omp)->Args({2, 41})->Args({3, 11})->Args({3, 15})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_psi)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
