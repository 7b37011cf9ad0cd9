#include <benchmark/benchmark.h>

#include "gnoe/gnoe.hpp"

using namespace gnoe;

namespace {

ExtensionHandle ext_of(const char* ring, const char* sigma, const char* delta = "zero", Mode mode = Mode::Standard) {
  const auto R = build_ring(parse_descriptor(ring));
  return Extension::make(R, parse_map(sigma, R), parse_map(delta, R), mode);
}

void run_mul(benchmark::State& state, const ExtensionHandle& ext) {
  Rng rng(kDefaultSeed);
  const auto degree = static_cast<std::size_t>(state.range(0));
  const auto p = random_poly(ext, degree, rng), q = random_poly(ext, degree, rng);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}

void BM_MulF8Frobenius(benchmark::State& state) { run_mul(state, ext_of("gf(2,3)", "frobenius(1)")); }
void BM_MulSkewDerivation(benchmark::State& state) {
  run_mul(state, ext_of("poly(rationals)", "identity", "derivative"));
}
void BM_MulOctonion(benchmark::State& state) { run_mul(state, ext_of("cayley(3,rationals,[-1,-1,-1])", "conjugation")); }
void BM_MulQuaternionFlipped(benchmark::State& state) {
  run_mul(state, ext_of("cayley(2,rationals,[-1,-1])", "conjugation", "zero", Mode::Flipped));
}

void BM_LeftReduce(benchmark::State& state) {
  const auto ext = ext_of("gf(3,2)", "frobenius(1)");
  Rng rng(kDefaultSeed);
  const auto degree = static_cast<std::size_t>(state.range(0));
  auto g = random_poly(ext, 3, rng);
  while (g.degree() != std::optional<std::size_t>(3)) g = random_poly(ext, 3, rng);
  const auto gens = GeneratorSet::make(Side::Left, {g});
  const auto q = random_poly(ext, degree, rng);
  for (auto _ : state) benchmark::DoNotOptimize(left_reduce(gens, q));
}

void BM_PiRecursion(benchmark::State& state) {
  const auto K = make_ring(parse_descriptor("poly(gf(3,1))"));
  const auto sigma = AdditiveMap::substitution(K, 2), delta = AdditiveMap::formal_derivative(K);
  const auto s = K->parse("Y^3+2Y+1");
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pi_map(sigma, delta, m / 2, m, s, PiStrategy::Recursion));
}

void BM_PiEnumeration(benchmark::State& state) {
  const auto K = make_ring(parse_descriptor("poly(gf(3,1))"));
  const auto sigma = AdditiveMap::substitution(K, 2), delta = AdditiveMap::formal_derivative(K);
  const auto s = K->parse("Y^3+2Y+1");
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pi_map(sigma, delta, m / 2, m, s, PiStrategy::Enumeration));
}

}  // namespace

BENCHMARK(BM_MulF8Frobenius)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_MulSkewDerivation)->Arg(4)->Arg(8);
BENCHMARK(BM_MulOctonion)->Arg(2)->Arg(4);
BENCHMARK(BM_MulQuaternionFlipped)->Arg(2)->Arg(4);
BENCHMARK(BM_LeftReduce)->Arg(8)->Arg(32);
BENCHMARK(BM_PiRecursion)->Arg(4)->Arg(8);
BENCHMARK(BM_PiEnumeration)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
