#include <benchmark/benchmark.h>

#include "mspotty/enumerators.hpp"

using namespace mspotty;

namespace {

std::shared_ptr<const Ring> r2() {
    static auto ring = make_ring(RingSpec::rk(2));
    return ring;
}

LinearCode big_code() {
    const auto ring = r2();
    auto w = [&](std::initializer_list<const char*> lits) {
        std::vector<Elem> out;
        for (const char* lit : lits) out.push_back(ring->parse_element(lit));
        return out;
    };
    return span(ring, 3, 2,
                {w({"1", "0", "0", "u", "v", "1+u"}), w({"0", "u", "0", "u+v", "uv", "u"}),
                 w({"uv", "0", "uv", "uv", "0", "uv"})});
}

void BM_SpanEnumeration(benchmark::State& state) {
    for (auto _ : state) {
        LinearCode c = big_code();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SpanEnumeration);

void BM_DualBruteSmall(benchmark::State& state) {
    const auto z4 = make_ring(RingSpec::integers_mod(4));
    const LinearCode c = span(z4, 2, 2, {{1, 1, 2, 3}});
    for (auto _ : state) {
        LinearCode d = dual_brute(c);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_DualBruteSmall);

void BM_HammingTransform(benchmark::State& state) {
    const LinearCode c = big_code();
    const AlphaDistribution alpha = alpha_distribution(c);
    const SpottyParams params(3, 2);
    for (auto _ : state) {
        KernelCache cache;  // fresh cache so kernels are rebuilt
        MultiPoly p = macwilliams_hamming(alpha, BigInt(c.size()), 16, params, cache);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_HammingTransform);

void BM_LeeKernel(benchmark::State& state) {
    const auto ring = r2();
    std::vector<uint32_t> comp(16, 0);
    comp[1] = 1;
    comp[2] = 1;
    comp[8] = 1;  // three distinct elements in a byte
    for (auto _ : state) {
        KernelCache cache;
        MultiPoly p = cache.lee_kernel(comp, *ring, 2);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_LeeKernel);

void BM_JointTransform(benchmark::State& state) {
    const auto ring = r2();
    auto w = [&](std::initializer_list<const char*> lits) {
        std::vector<Elem> out;
        for (const char* lit : lits) out.push_back(ring->parse_element(lit));
        return out;
    };
    const LinearCode c =
        span(ring, 3, 3,
             {w({"1", "0", "0", "u", "v", "1", "0", "0", "u"}),
              w({"0", "0", "uv", "uv", "0", "0", "0", "uv", "uv"})});
    const LinearCode d = span(ring, 3, 3, {w({"uv", "0", "uv", "0", "uv", "0", "0", "0", "uv"})});
    const JointStats stats = joint_statistics(c, d);
    const SpottyParams params(3, 2);
    for (auto _ : state) {
        KernelCache cache;
        MultiPoly p = joint_macwilliams(JointDual::DualFirst, stats, BigInt(c.size()),
                                        BigInt(d.size()), 16, params, cache);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_JointTransform);

}  // namespace

BENCHMARK_MAIN();
