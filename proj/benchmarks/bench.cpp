#include <benchmark/benchmark.h>

#include "clab/contraction.hpp"
#include "clab/markov.hpp"
#include "clab/orlicz.hpp"
#include "clab/prob.hpp"
#include "clab/rng.hpp"
#include "clab/young.hpp"

namespace {

clab::Vec random_vector(int m, std::uint64_t seed) {
  clab::SplitMix64 rng(seed);
  clab::Vec f(m);
  for (int i = 0; i < m; ++i) f[i] = 2.0 * rng.uniform() - 1.0;
  return f;
}

clab::ProbVector random_weights(int m, std::uint64_t seed) {
  clab::SplitMix64 rng(seed);
  std::vector<double> w(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) total += (w[i] = rng.uniform() + 1e-3);
  for (double& x : w) x /= total;
  return clab::ProbVector(std::move(w));
}

void bm_lp_norm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const clab::Vec f = random_vector(m, 11);
  const clab::ProbVector mu = random_weights(m, 12);
  for (auto _ : state) benchmark::DoNotOptimize(clab::lp_norm(f, mu, 4.0));
}
BENCHMARK(bm_lp_norm)->Arg(16)->Arg(64)->Arg(256);

void bm_luxemburg_norm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const clab::Vec f = random_vector(m, 21);
  const clab::ProbVector mu = random_weights(m, 22);
  const clab::Young psi = clab::Young::sub_gaussian();
  for (auto _ : state)
    benchmark::DoNotOptimize(clab::luxemburg_norm(f, mu, psi));
}
BENCHMARK(bm_luxemburg_norm)->Arg(16)->Arg(64)->Arg(256);

void bm_amemiya_norm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const clab::Vec f = random_vector(m, 31);
  const clab::ProbVector mu = random_weights(m, 32);
  const clab::Young psi = clab::Young::sub_gaussian();
  for (auto _ : state)
    benchmark::DoNotOptimize(clab::amemiya_norm(f, mu, psi));
}
BENCHMARK(bm_amemiya_norm)->Arg(16)->Arg(64)->Arg(256);

void bm_lp_contraction_bound(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const clab::MarkovKernel k = clab::random_stochastic(m, 41);
  const clab::ProbVector pi = clab::stationary_distribution(k);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        clab::lp_contraction_bound(k, pi, 4.0, 4.0, clab::Direction::forward, 1));
}
BENCHMARK(bm_lp_contraction_bound)->Arg(8)->Arg(16)->Arg(64);

void bm_orlicz_contraction_bound(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const clab::MarkovKernel k = clab::random_stochastic(m, 51);
  const clab::ProbVector pi = clab::stationary_distribution(k);
  const clab::Young psi = clab::Young::power(3.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(clab::orlicz_contraction_bound(
        k, pi, psi, psi, clab::NormFlavor::luxemburg, clab::Direction::forward, 1));
}
BENCHMARK(bm_orlicz_contraction_bound)->Arg(4)->Arg(8)->Arg(16);

void bm_semigroup_kernel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const clab::MarkovKernel k = clab::random_stochastic(m, 61);
  for (auto _ : state)
    benchmark::DoNotOptimize(clab::semigroup_kernel(k, 1.25));
}
BENCHMARK(bm_semigroup_kernel)->Arg(8)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
