// OpenMP kernels against the serial reference loops, on the shapes one
// training step of the 784-500 MNIST layer produces.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "ffl/kernels.hpp"
#include "ffl/layer.hpp"
#include "ffl/numeric.hpp"

namespace {

ffl::Matrix<float> random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  ffl::Rng rng(seed);
  ffl::Matrix<float> m(rows, cols);
  for (auto& v : m.values()) v = static_cast<float>(rng.uniform(-1, 1));
  return m;
}

void set_macs(benchmark::State& state, double macs) {
  state.counters["MAC/s"] = benchmark::Counter(macs, benchmark::Counter::kIsIterationInvariantRate);
  state.counters["threads"] = omp_get_max_threads();
}

// Arguments: rows of a, inner dimension, columns of b.
void BM_matmul_parallel(benchmark::State& state) {
  const auto a = random_matrix(state.range(0), state.range(1), 1);
  const auto b = random_matrix(state.range(1), state.range(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ffl::matmul(a, b));
  set_macs(state, double(state.range(0)) * state.range(1) * state.range(2));
}

void BM_matmul_serial(benchmark::State& state) {
  const auto a = random_matrix(state.range(0), state.range(1), 1);
  const auto b = random_matrix(state.range(1), state.range(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ffl::serial::matmul(a, b));
  set_macs(state, double(state.range(0)) * state.range(1) * state.range(2));
}

void BM_transpose_parallel(benchmark::State& state) {
  const auto a = random_matrix(state.range(0), state.range(1), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ffl::transpose(a));
  state.SetBytesProcessed(state.iterations() * state.range(0) * state.range(1) * sizeof(float));
}

void BM_transpose_serial(benchmark::State& state) {
  const auto a = random_matrix(state.range(0), state.range(1), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ffl::serial::transpose(a));
  state.SetBytesProcessed(state.iterations() * state.range(0) * state.range(1) * sizeof(float));
}

// One label-fed gradient evaluation: batch x 784 -> 500 with 10 classes.
void BM_ffdl_layer_step(benchmark::State& state) {
  const std::size_t batch = state.range(0);
  ffl::Rng rng(4);
  const auto params = ffl::LayerParams<float>::init(784, 500, 10, std::nullopt, {}, rng);
  const auto x = random_matrix(batch, 784, 5);
  ffl::Matrix<float> pos(batch, 10), neg(batch, 10);
  for (std::size_t i = 0; i < batch; ++i) {
    pos(i, i % 10) = 1;
    neg(i, (i + 3) % 10) = 1;
  }
  ffl::LayerInputs<float> in;
  in.x_pos = &x;
  in.label_pos = &pos;
  in.label_neg = &neg;
  for (auto _ : state) benchmark::DoNotOptimize(ffl::layer_gradients(params.view(), in, {}));
  state.SetItemsProcessed(state.iterations() * batch);
}

}  // namespace

BENCHMARK(BM_matmul_parallel)->Args({512, 784, 500})->Args({500, 512, 784})->Args({64, 64, 64});
BENCHMARK(BM_matmul_serial)->Args({512, 784, 500})->Args({500, 512, 784})->Args({64, 64, 64});
BENCHMARK(BM_transpose_parallel)->Args({512, 784})->Args({2048, 1024});
BENCHMARK(BM_transpose_serial)->Args({512, 784})->Args({2048, 1024});
BENCHMARK(BM_ffdl_layer_step)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
