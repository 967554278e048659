// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "earlyadd/baselines.hpp"
#include "earlyadd/engine.hpp"
#include "earlyadd/scheduler.hpp"

namespace {

earlyadd::DelayProfile random_profile(int width, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<long long> raw;
    raw.reserve(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        raw.push_back(static_cast<long long>(gen() % 8));
    }
    return earlyadd::validate_profile(raw);
}

void BM_gef_schedule(benchmark::State& state) {
    const auto dp = random_profile(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(earlyadd::gef_schedule(dp));
    }
}
BENCHMARK(BM_gef_schedule)->Arg(16)->Arg(64)->Arg(256);

void BM_igef_schedule(benchmark::State& state) {
    const auto dp = random_profile(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(earlyadd::igef_schedule(dp));
    }
}
BENCHMARK(BM_igef_schedule)->Arg(16)->Arg(64)->Arg(256);

void BM_build_and_time(benchmark::State& state) {
    const auto dp = random_profile(static_cast<int>(state.range(0)), 11);
    const auto trace = earlyadd::igef_schedule(dp);
    for (auto _ : state) {
        const auto net = earlyadd::build_netlist(trace);
        benchmark::DoNotOptimize(earlyadd::timing_analyze(net, dp));
    }
}
BENCHMARK(BM_build_and_time)->Arg(16)->Arg(64);

void BM_verify_exhaustive_w8(benchmark::State& state) {
    const auto dp = earlyadd::DelayProfile::zeros(8);
    const auto net = earlyadd::build_netlist(earlyadd::igef_schedule(dp));
    for (auto _ : state) {
        benchmark::DoNotOptimize(earlyadd::verify(net, 8, earlyadd::VerifyMode::exhaustive()));
    }
}
BENCHMARK(BM_verify_exhaustive_w8);

void BM_evaluate_words(benchmark::State& state) {
    const int width = 32;
    const auto net = earlyadd::build_chain(earlyadd::BaselineKind::ChainCla2, width);
    std::vector<std::uint64_t> a(width, 0x0123456789abcdefull);
    std::vector<std::uint64_t> b(width, 0xfedcba9876543210ull);
    std::vector<std::uint64_t> sums(width);
    std::vector<std::uint64_t> scratch;
    std::uint64_t carry = 0;
    for (auto _ : state) {
        earlyadd::evaluate_words(net, a, b, sums, carry, scratch);
        benchmark::DoNotOptimize(carry);
        benchmark::DoNotOptimize(sums.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 64);
}
BENCHMARK(BM_evaluate_words);

} // namespace

BENCHMARK_MAIN();
