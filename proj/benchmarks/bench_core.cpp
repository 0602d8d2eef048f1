#include <benchmark/benchmark.h>

#include "czsplit/cz.hpp"
#include "czsplit/oracle.hpp"
#include "czsplit/poly.hpp"
#include "czsplit/rng.hpp"

using namespace czsplit;

namespace {

void BM_FieldMulGeneric(benchmark::State& state) {
    auto k = Field::make(2, (std::uint32_t)state.range(0));
    Rng rng(1);
    enc_t a = (enc_t)(1 + rng.below(k->size() - 1));
    enc_t b = (enc_t)(1 + rng.below(k->size() - 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = k->mul(a, b));
    }
}
BENCHMARK(BM_FieldMulGeneric)->Arg(4)->Arg(8)->Arg(12);

void BM_FieldMulTable(benchmark::State& state) {
    auto k = Field::make(2, (std::uint32_t)state.range(0));
    k->ensure_log_tables();
    Rng rng(1);
    enc_t a = (enc_t)(1 + rng.below(k->size() - 1));
    enc_t b = (enc_t)(1 + rng.below(k->size() - 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = k->mul(a, b));
    }
}
BENCHMARK(BM_FieldMulTable)->Arg(4)->Arg(8)->Arg(12);

void BM_Powmod(benchmark::State& state) {
    auto k = Field::make(2, 8);
    Rng rng(2);
    Polynomial sigma = random_monic(k, (unsigned)state.range(0), rng);
    Polynomial c = Polynomial::monomial(k, 1);
    BigUint exponent = splitting_exponent(2, 8 * (unsigned)state.range(0), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(powmod(c, exponent, sigma));
    }
}
BENCHMARK(BM_Powmod)->Arg(4)->Arg(8)->Arg(16);

void BM_SplitOnce(benchmark::State& state) {
    auto k = Field::make(2, 8);
    CosetStructure cs = CosetStructure::make(k, 3);
    Rng rng(3);
    std::vector<enc_t> roots;
    for (int i = 0; i < state.range(0); ++i) {
        enc_t r;
        do {
            r = (enc_t)(1 + rng.below(255));
        } while (std::find(roots.begin(), roots.end(), r) != roots.end());
        roots.push_back(r);
    }
    Polynomial sigma = product_from_roots(k, roots);
    Polynomial c = Polynomial::monomial(k, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(split_once(sigma, c, cs));
    }
}
BENCHMARK(BM_SplitOnce)->Arg(2)->Arg(6)->Arg(12);

void BM_FactorRandomDegree12(benchmark::State& state) {
    auto k = Field::make(2, 8);
    Rng rng(4);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        state.PauseTiming();
        Polynomial f = random_monic(k, 12, rng);
        state.ResumeTiming();
        benchmark::DoNotOptimize(factor(f, seed++));
    }
}
BENCHMARK(BM_FactorRandomDegree12);

void BM_BruteCountPair(benchmark::State& state) {
    auto k = Field::make(2, (std::uint32_t)state.range(0));
    CosetStructure cs = CosetStructure::make(k, 3);
    cs.ensure_table();
    std::vector<enc_t> roots{1, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_count(cs, roots));
    }
}
BENCHMARK(BM_BruteCountPair)->Arg(8)->Arg(10)->Arg(12);

void BM_ExhaustiveMaxPairs(benchmark::State& state) {
    auto k = Field::make(2, 6);
    CosetStructure cs = CosetStructure::make(k, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_count(cs, 2, 100'000'000, 0, 1));
    }
}
BENCHMARK(BM_ExhaustiveMaxPairs);

} // namespace

BENCHMARK_MAIN();
