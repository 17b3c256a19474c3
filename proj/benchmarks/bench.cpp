#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "cattorus/cattorus.hpp"
#include "cattorus/lattice.hpp"
#include "cattorus/linebundle.hpp"
#include "cattorus/rng.hpp"
#include "cattorus/xmod.hpp"

using namespace cattorus;

namespace {

std::vector<SArrow> arrow_pool(const XMod& xm, std::size_t n,
                               std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SArrow> pool;
  pool.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pool.push_back(SArrow{xm.base.sample(rng), xm.fiber.sample(rng)});
  return pool;
}

void BM_arrow_tensor(benchmark::State& state) {
  XMod theta = make_theta(builtin_lattice("A2"));
  auto pool = arrow_pool(theta, 64, 11);
  std::size_t i = 0;
  for (auto _ : state) {
    const SArrow& a = pool[i % pool.size()];
    const SArrow& b = pool[(3 * i + 1) % pool.size()];
    benchmark::DoNotOptimize(s_tensor(theta, a, b));
    ++i;
  }
}
BENCHMARK(BM_arrow_tensor);

void BM_arrow_compose(benchmark::State& state) {
  XMod theta = make_theta(builtin_lattice("A2"));
  auto pool = arrow_pool(theta, 64, 13);
  Rng rng(17);
  std::size_t i = 0;
  for (auto _ : state) {
    const SArrow& a = pool[i % pool.size()];
    SArrow b{s_target(theta, a), pool[(5 * i + 2) % pool.size()].label};
    benchmark::DoNotOptimize(s_compose(theta, a, b));
    ++i;
  }
}
BENCHMARK(BM_arrow_compose);

void BM_axiom_trials(benchmark::State& state) {
  Lattice u = builtin_lattice("U");
  XMod tp = make_theta_prime(u);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        xmod_axioms(tp, 5, static_cast<int>(state.range(0))).ok());
}
BENCHMARK(BM_axiom_trials)->Arg(50)->Arg(200);

void BM_theta_series(benchmark::State& state) {
  Lattice d4 = builtin_lattice("D4");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        theta_series(d4, static_cast<long long>(state.range(0))));
}
BENCHMARK(BM_theta_series)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_holonomy(benchmark::State& state) {
  Lattice a2 = builtin_lattice("A2");
  Rng rng(23);
  VecQ v0 = rng.vec_q(2, 4, 12);
  PLPath f = pl_path({{Rational(0), v0},
                      {Rational(1, 3), rng.vec_q(2, 4, 12)},
                      {Rational(1, 2), rng.vec_q(2, 4, 12)},
                      {Rational(3, 4), rng.vec_q(2, 4, 12)},
                      {Rational(1), v0 + to_q(rng.vec_z(2, 3))}});
  VecQ w0 = rng.vec_q(2, 4, 12);
  PLPath g = pl_path({{Rational(0), w0},
                      {Rational(2, 5), rng.vec_q(2, 4, 12)},
                      {Rational(1), w0 + to_q(rng.vec_z(2, 3))}});
  for (auto _ : state) benchmark::DoNotOptimize(holonomy(a2, f, g));
}
BENCHMARK(BM_holonomy);

void BM_isometry_group_a2(benchmark::State& state) {
  Lattice a2 = builtin_lattice("A2");
  for (auto _ : state) benchmark::DoNotOptimize(isometry_group(a2));
}
BENCHMARK(BM_isometry_group_a2);

void BM_isometry_group_d4(benchmark::State& state) {
  Lattice d4 = builtin_lattice("D4");
  for (auto _ : state) benchmark::DoNotOptimize(isometry_group(d4));
}
BENCHMARK(BM_isometry_group_d4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
