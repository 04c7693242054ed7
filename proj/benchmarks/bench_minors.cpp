#include <benchmark/benchmark.h>

#include <vector>

#include "rtp/network.hpp"
#include "rtp/riordan.hpp"
#include "rtp/totalpos.hpp"

namespace {

using namespace rtp;

const TridiagParams kCatalan(1, 1, 1, 2, 1);

// Full TP_r sweep over the leading n x n block of a passing production
// matrix, so no early exit.
void BM_IsTpR(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = static_cast<std::size_t>(state.range(1));
  const Matrix m = kCatalan.production(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_tp_r(m, r, n));
  state.counters["minors"] = static_cast<double>(minor_count(n, r));
}
BENCHMARK(BM_IsTpR)->ArgsProduct({{6, 8, 10, 12}, {2, 3, 4}})->Unit(benchmark::kMillisecond);

void BM_Determinant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = triangle_from_az(AZPair({1, 2, 1}, {1, 1}), 2 * n).to_matrix().leading(n, n);
  Matrix shifted(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) shifted(i, j) = m(i, j) + Rational(static_cast<long>(i + j), 3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(determinant(shifted));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 10, 2);

void BM_TriangleFromAz(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const AZPair az({1, 2, 1}, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(triangle_from_az(az, N));
}
BENCHMARK(BM_TriangleFromAz)->RangeMultiplier(2)->Range(8, 64);

void BM_PlanarTridiagNetwork(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tridiag_planar_network(kCatalan, depth));
}
BENCHMARK(BM_PlanarTridiagNetwork)->RangeMultiplier(2)->Range(4, 32);

void BM_LgvSignedDeterminant(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const WeightedNetwork net = tridiag_tp2_network(kCatalan, 6);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(lgv_signed_determinant(net, idx, idx));
}
BENCHMARK(BM_LgvSignedDeterminant)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
