#include <benchmark/benchmark.h>

#include <random>

#include "rds/rds.hpp"

using namespace rds;

static void BM_RationalSqrt(benchmark::State& state) {
  const Rational big = Rational(Integer("123456789123456789")).pow(2) / Rational(Integer("987654321")).pow(2);
  for (auto _ : state) benchmark::DoNotOptimize(rational_sqrt(big));
}
BENCHMARK(BM_RationalSqrt);

static void BM_SquarefreePart(benchmark::State& state) {
  const Rational q(Integer("2") * Integer("9973") * Integer("9973") * Integer("1000003"), Integer(45));
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_part(q));
}
BENCHMARK(BM_SquarefreePart);

static void BM_PolyGcd(benchmark::State& state) {
  const auto deg = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  auto random_poly = [&] {
    std::vector<ImQuadElement> cs;
    for (int i = 0; i <= deg; ++i)
      cs.emplace_back(3, Rational(static_cast<long>(rng() % 19) - 9), Rational(static_cast<long>(rng() % 19) - 9));
    cs.back() = ImQuadElement(3, 1);
    return ImQuadPoly(3, cs);
  };
  const auto common = random_poly();
  const auto a = common * random_poly();
  const auto b = common * random_poly();
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(2)->Arg(4)->Arg(8);

static void BM_Audit(benchmark::State& state) {
  const auto c = generate_circle_rds(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit_general_position(c));
}
BENCHMARK(BM_Audit)->Arg(6)->Arg(10)->Arg(14);

static void BM_Embed(benchmark::State& state) {
  const auto m = distance_matrix(generate_circle_rds(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(embed_from_distances(m));
}
BENCHMARK(BM_Embed)->Arg(8)->Arg(16);

static void BM_Census(benchmark::State& state) {
  const auto sys = default_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_surface(sys));
}
BENCHMARK(BM_Census)->Arg(4)->Arg(10)->Arg(16);

static void BM_Search(benchmark::State& state) {
  SearchSpec s;
  s.numerator_bound = state.range(0);
  s.target_size = 3;
  for (auto _ : state) benchmark::DoNotOptimize(search(s));
}
BENCHMARK(BM_Search)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
