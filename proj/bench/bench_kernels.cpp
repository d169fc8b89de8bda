// Parallel kernels against their serial reference implementations.

#include <benchmark/benchmark.h>

#include <vector>

#include "bqdirac/circle_spaces.hpp"
#include "bqdirac/kernels.hpp"
#include "bqdirac/planewave.hpp"
#include "bqdirac/qed_decomposition.hpp"
#include "bqdirac/random.hpp"
#include "bqdirac/spectrum.hpp"

using namespace bqdirac;

namespace {

std::vector<Biquaternion> biquaternions(std::size_t n) {
  Rng rng(1);
  std::vector<Biquaternion> xs(n);
  for (auto& x : xs) x = rng.biquaternion();
  return xs;
}

std::vector<Point4> off_cone(std::size_t n) {
  Rng rng(2);
  std::vector<Point4> pts(n);
  for (auto& p : pts) {
    const double x3 = rng.uniform(0.5, 3.0);
    p = {0.9 * x3 * rng.uniform(-1, 1), rng.uniform(-3, 3), rng.uniform(-3, 3), x3};
  }
  return pts;
}

std::vector<RhoSample> rho_grid(std::size_t n) {
  Rng rng(3);
  std::vector<RhoSample> g(n);
  for (auto& s : g) s = {rng.uniform(-5, 5), rng.uniform(0, 3), rng.uniform(0.05, 2)};
  return g;
}

template <bool Parallel>
void BM_Rotor(benchmark::State& state) {
  const auto xs = biquaternions(static_cast<std::size_t>(state.range(0)));
  const auto rotor = TachyonRotor::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? rotor_agreement_error(xs, rotor) : rotor_agreement_error_serial(xs, rotor));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_RoundTrip(benchmark::State& state) {
  const auto pts = off_cone(static_cast<std::size_t>(state.range(0)));
  const auto L = SpaceChart::minkowski();
  const auto S = SpaceChart::create(ChartKind::S, 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? round_trip_error(pts, L, S) : round_trip_error_serial(pts, L, S));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Residual(benchmark::State& state) {
  const auto pts = off_cone(static_cast<std::size_t>(state.range(0)));
  const WaveFunction w = free_solution(1.0);
  const Biquaternion M = scalar_mass_term(1.0);
  for (auto _ : state) {
    const auto r = Parallel ? residual(w, Biquaternion::zero(), 1.0, M, pts, 1e-5)
                            : residual_serial(w, Biquaternion::zero(), 1.0, M, pts, 1e-5);
    benchmark::DoNotOptimize(r.fd);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_RhoGrid(benchmark::State& state) {
  const auto g = rho_grid(static_cast<std::size_t>(state.range(0)));
  const double d = coefficient_d_prime({2, 1}, 1.0 / 137.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? rho_grid_max_residual(g, d) : rho_grid_max_residual_serial(g, d));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Spectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto t = Parallel ? spectrum_table(7.2973525693e-3, 510998.9461, n, n)
                            : spectrum_table_serial(7.2973525693e-3, 510998.9461, n, n);
    benchmark::DoNotOptimize(t.data());
  }
}

}  // namespace

BENCHMARK(BM_Rotor<false>)->Arg(1 << 14);
BENCHMARK(BM_Rotor<true>)->Arg(1 << 14);
BENCHMARK(BM_RoundTrip<false>)->Arg(1 << 14);
BENCHMARK(BM_RoundTrip<true>)->Arg(1 << 14);
BENCHMARK(BM_Residual<false>)->Arg(1 << 10);
BENCHMARK(BM_Residual<true>)->Arg(1 << 10);
BENCHMARK(BM_RhoGrid<false>)->Arg(1 << 16);
BENCHMARK(BM_RhoGrid<true>)->Arg(1 << 16);
BENCHMARK(BM_Spectrum<false>)->Arg(64);
BENCHMARK(BM_Spectrum<true>)->Arg(64);

BENCHMARK_MAIN();
