#include <benchmark/benchmark.h>

#include <random>

#include "k3dual/duality.hpp"
#include "k3dual/hermite.hpp"
#include "k3dual/lattice.hpp"
#include "k3dual/weierstrass.hpp"

using namespace k3dual;

namespace {

HomPoly random_form(std::mt19937_64& g, int deg) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Rational> c(deg + 1);
  for (auto& x : c) x = d(g);
  return HomPoly(deg, c);
}

void BM_FiberConfigurationGenericK3(benchmark::State& state) {
  std::mt19937_64 g(1);
  WeierstrassModel m = WeierstrassModel::short_form(random_form(g, 8), random_form(g, 12), 2);
  for (auto _ : state) benchmark::DoNotOptimize(fiber_configuration(m));
}
BENCHMARK(BM_FiberConfigurationGenericK3);

void BM_FiberConfigurationAlternate(benchmark::State& state) {
  std::mt19937_64 g(2);
  AlternatePair p{random_form(g, 4), random_form(g, 8), std::nullopt};
  WeierstrassModel m = vgs_dual(p).model();
  for (auto _ : state) benchmark::DoNotOptimize(fiber_configuration(m));
}
BENCHMARK(BM_FiberConfigurationAlternate);

void BM_KodairaFromValuations(benchmark::State& state) {
  const LocalValuations cases[] = {{0, 0, 5}, {1, 1, 2}, {1, 2, 3}, {2, 2, 4},  {2, 3, 6},
                                   {2, 3, 9}, {3, 4, 8}, {3, 5, 9}, {4, 5, 10}, {2, 3, 12}};
  for (auto _ : state)
    for (const auto& v : cases) benchmark::DoNotOptimize(kodaira_from_valuations(v));
}
BENCHMARK(BM_KodairaFromValuations);

void BM_JacobianQuartic(benchmark::State& state) {
  QuarticCurve h{{3, -1, 4, 1, -5}};
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_quartic(h));
}
BENCHMARK(BM_JacobianQuartic);

void BM_AbelJacobi(benchmark::State& state) {
  QuarticCurve h{{1, 2, 0, 0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(abel_jacobi(h, {0, -1}, {1, 2}));
}
BENCHMARK(BM_AbelJacobi);

void BM_TwoElementaryInvariants(benchmark::State& state) {
  GramLattice l = parse_lattice("H + D4(-1)^2 + A1(-1)^4");
  for (auto _ : state) benchmark::DoNotOptimize(two_elementary_invariants(l));
}
BENCHMARK(BM_TwoElementaryInvariants);

void BM_SmithNormalForm(benchmark::State& state) {
  IntMatrix m = parse_lattice("H(2) + E8(-2)").gram();
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm);

void BM_BaseChangeK3(benchmark::State& state) {
  std::mt19937_64 g(3);
  RESData r{random_form(g, 4).with_vars({"U", "V"}), random_form(g, 6).with_vars({"U", "V"})};
  for (auto _ : state) benchmark::DoNotOptimize(base_change_k3(r, 2, 3));
}
BENCHMARK(BM_BaseChangeK3);

}  // namespace
BENCHMARK_MAIN();
