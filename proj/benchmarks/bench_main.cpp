#include <benchmark/benchmark.h>

#include "bvkit/cocom.hpp"
#include "bvkit/exterior.hpp"
#include "bvkit/groebner.hpp"
#include "bvkit/hochschild.hpp"
#include "bvkit/identities.hpp"
#include "bvkit/koszul.hpp"
#include "families.hpp"

using namespace bvkit;

namespace {

const std::vector<std::string> XY = {"x", "y"};

// x^{k+1} + y^2, so mu = k.
void BM_MilnorAk(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  Polynomial f = parse_polynomial("x^" + std::to_string(k + 1) + " + y^2", XY);
  for (auto _ : state) benchmark::DoNotOptimize(milnor_ring(XY, f));
}
BENCHMARK(BM_MilnorAk)->DenseRange(1, 9, 2);

void BM_GroebnerJacobian(benchmark::State& state) {
  std::vector<std::string> v = {"x", "y", "z"};
  auto gens = jacobian_generators(parse_polynomial("x^3 + y^4 + z^5 + x*y*z", v));
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(gens, MonomialOrder::degrevlex()));
}
BENCHMARK(BM_GroebnerJacobian);

void BM_KoszulTruncated(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  auto f = parse_polynomial("x^3 + x*y^2", XY);
  auto cplx = build_koszul(XY, jacobian_generators(f));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_cohomology(cplx, D));
}
BENCHMARK(BM_KoszulTruncated)->Arg(4)->Arg(8);

void BM_SchoutenBracket(benchmark::State& state) {
  auto ctx = Context::make({"x", "y", "z"});
  Rng rng(3);
  std::vector<std::pair<Polyvector, Polyvector>> pairs;
  for (int i = 0; i < 64; ++i)
    pairs.emplace_back(random_polyvector(rng, ctx, rng.range(1, 3), 3), random_polyvector(rng, ctx, rng.range(1, 3), 3));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(schouten_bracket(u, v));
  }
}
BENCHMARK(BM_SchoutenBracket);

void BM_H0LocalRing(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  Rng rng(5);
  auto g = testing::random_dgla_12(rng, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(compare_h0_local_ring(g, D));
}
BENCHMARK(BM_H0LocalRing)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GerstenhaberBracket(benchmark::State& state) {
  Rng rng(9);
  std::size_t dim = static_cast<std::size_t>(state.range(0));
  auto phi = testing::random_map(rng, dim, 2);
  auto psi = testing::random_map(rng, dim, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gerstenhaber_bracket(phi, psi));
}
BENCHMARK(BM_GerstenhaberBracket)->Arg(2)->Arg(3);

void BM_DeformationModuli(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  auto f = testing::dual_numbers();
  for (auto _ : state) benchmark::DoNotOptimize(deformation_moduli_truncated(f, D));
}
BENCHMARK(BM_DeformationModuli)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
