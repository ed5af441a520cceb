#include <benchmark/benchmark.h>

#include <random>

#include "setadf/adf.hpp"
#include "setadf/formula.hpp"
#include "setadf/setaf_semantics.hpp"
#include "setadf/signatures.hpp"
#include "setadf/translation.hpp"

using namespace setadf;

namespace {

std::vector<ArgumentId> ids(std::size_t n) {
  std::vector<ArgumentId> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back("a" + std::to_string(i));
  return out;
}

// fixed-seed framework with n arguments and about 2n attacks of size 1..3
Setaf make_setaf(std::size_t n) {
  std::mt19937_64 rng(n);
  auto args = ids(n);
  std::set<Attack> attacks;
  std::uniform_int_distribution<std::size_t> arg(0, n - 1), size(1, 3);
  while (attacks.size() < 2 * n) {
    std::set<ArgumentId> from;
    for (std::size_t k = size(rng); k > 0; --k) from.insert(args[arg(rng)]);
    attacks.insert(Attack{{from.begin(), from.end()}, args[arg(rng)]});
  }
  return Setaf(args, {attacks.begin(), attacks.end()});
}

void BM_SetafEnumerate(benchmark::State& state, Semantics sigma) {
  Setaf f = make_setaf(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(f, sigma));
}
BENCHMARK_CAPTURE(BM_SetafEnumerate, adm, Semantics::Adm)->DenseRange(4, 10, 3);
BENCHMARK_CAPTURE(BM_SetafEnumerate, prf, Semantics::Prf)->DenseRange(4, 10, 3);
BENCHMARK_CAPTURE(BM_SetafEnumerate, stb, Semantics::Stb)->DenseRange(4, 10, 3);

void BM_AdfEnumerate(benchmark::State& state, Semantics sigma) {
  Adf d = setaf_to_setadf(make_setaf(static_cast<std::size_t>(state.range(0)))).to_adf();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_adf(d, sigma));
}
BENCHMARK_CAPTURE(BM_AdfEnumerate, prf, Semantics::Prf)->DenseRange(4, 8, 2);
BENCHMARK_CAPTURE(BM_AdfEnumerate, stb, Semantics::Stb)->DenseRange(4, 8, 2);

void BM_Gamma(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Adf d = setaf_to_setadf(make_setaf(n)).to_adf();
  auto v = Interpretation::uniform(d.statements(), Value3::U);
  for (auto _ : state) benchmark::DoNotOptimize(gamma(d, v));
}
BENCHMARK(BM_Gamma)->DenseRange(4, 12, 4);

void BM_NegativeCnf(benchmark::State& state) {
  // (not a0 or not a1) and ... written as the negation of a DNF of positive terms
  auto a = ids(static_cast<std::size_t>(state.range(0)));
  std::vector<Formula> terms;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    terms.push_back(Formula::conj({Formula::atom(a[i]), Formula::atom(a[i + 1])}));
  }
  Formula f = Formula::neg(Formula::disj(terms));
  for (auto _ : state) benchmark::DoNotOptimize(to_negative_cnf(f));
}
BENCHMARK(BM_NegativeCnf)->DenseRange(3, 9, 3);

void BM_Realize(benchmark::State& state) {
  Setaf f = make_setaf(static_cast<std::size_t>(state.range(0)));
  auto l = enumerate(f, Semantics::Cf);
  for (auto _ : state) benchmark::DoNotOptimize(realize(l, Semantics::Cf));
}
BENCHMARK(BM_Realize)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
