#include <benchmark/benchmark.h>
#include <symideal/symideal.hpp>

#include <vector>

using namespace symideal;

namespace {

const auto QQ = CoefficientRing::rationals();
const auto F2 = CoefficientRing::prime_field(2);

void BM_multiply_h(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  auto a = h_family(QQ, n, 3);
  auto b = apply_column(ColumnMap::parse("{1->4,2->5,3->6}"), a) + a;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_multiply_h)->DenseRange(2, 4);

void BM_buchberger_determinants(benchmark::State& state) {
  const auto width = static_cast<std::uint32_t>(state.range(0));
  std::vector<Polynomial> gens;
  for (std::uint32_t i = 1; i <= width; ++i) {
    for (std::uint32_t j = i + 1; j <= width; ++j) {
      std::vector<std::uint32_t> cols{i, j};
      gens.push_back(determinant_gen(QQ, 2, cols));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_buchberger_determinants)->DenseRange(3, 4);

void BM_multigraded_hk(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  std::vector<Polynomial> gens;
  for (std::uint32_t l = 1; l < k; ++l) gens.push_back(h_family(QQ, 2, l));
  auto spec = make_ideal_spec(QQ, 2, Ambient::SymmetricSubring, gens);
  auto target = h_family(QQ, 2, k);
  for (auto _ : state) benchmark::DoNotOptimize(member_multigraded(target, spec));
}
BENCHMARK(BM_multigraded_hk)->DenseRange(2, 4);

void BM_hk_nonmembership(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nonmembership_hk(3, 3, 3, 4));
}
BENCHMARK(BM_hk_nonmembership);

void BM_vaughanlee_k5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vaughanlee_check(5, 5));
}
BENCHMARK(BM_vaughanlee_k5)->Unit(benchmark::kMillisecond);

void BM_orbit_audit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbit_divisibility_audit(3, 4));
}
BENCHMARK(BM_orbit_audit);

}  // namespace

BENCHMARK_MAIN();
