#include <doctest.h>

#include <random>

#include "collatz/errors.hpp"
#include "collatz/range_kernel.hpp"
#include "oracle/schoolbook.hpp"

using namespace collatz::kernels;

namespace {

std::vector<OrbitStat> run(KernelKind kind, const std::vector<std::uint64_t>& starts, std::uint64_t budget) {
    std::vector<OrbitStat> out(starts.size());
    run_orbit_kernel(kind, starts, budget, out);
    return out;
}

void check_equivalent(const std::vector<std::uint64_t>& starts, std::uint64_t budget) {
    const auto reference = run(KernelKind::scalar, starts, budget);
    for (auto kind : available_kernels()) {
        CAPTURE(kernel_name(kind));
        const auto got = run(kind, starts, budget);
        for (std::size_t i = 0; i < starts.size(); ++i) {
            CAPTURE(starts[i]);
            REQUIRE(got[i] == reference[i]);
        }
    }
}

}  // namespace

TEST_CASE("scalar kernel agrees with the schoolbook oracle") {
    std::vector<std::uint64_t> starts;
    for (std::uint64_t x = 1; x <= 20000; ++x) starts.push_back(x);
    const auto stats = run(KernelKind::scalar, starts, 100000);
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const auto w = oracle::walk(oracle::Big(starts[i]), 100000);
        REQUIRE(stats[i].status == OrbitStatus::converged);
        REQUIRE(stats[i].steps == w.landings);
        REQUIRE(oracle::Big(stats[i].peak) == w.peak_odd);
    }
}

TEST_CASE("kernel edge cases") {
    const auto s = run(KernelKind::scalar, {1, 2, 1024, 27, 3}, 1000);
    CHECK(s[0] == OrbitStat{0, 1, OrbitStatus::converged});
    CHECK(s[1] == OrbitStat{1, 1, OrbitStatus::converged});
    CHECK(s[2] == OrbitStat{1, 1, OrbitStatus::converged});
    CHECK(s[3] == OrbitStat{41, 3077, OrbitStatus::converged});
    CHECK(s[4] == OrbitStat{2, 5, OrbitStatus::converged});  // 3 -> 5 -> 1

    // a budget of one step stops 27 immediately after its first step
    const auto t = run(KernelKind::scalar, {27}, 1);
    CHECK(t[0].status == OrbitStatus::exhausted);
    CHECK(t[0].steps == 1);

    const auto o = run(KernelKind::scalar, {kMaxOddOperand + 2}, 1000);
    CHECK(o[0].status == OrbitStatus::overflow);

    std::vector<OrbitStat> out(1);
    CHECK_THROWS_AS(run_orbit_kernel(KernelKind::scalar, std::vector<std::uint64_t>{0}, 10, out),
                    collatz::DomainError);
    CHECK_THROWS_AS(run_orbit_kernel(KernelKind::scalar, std::vector<std::uint64_t>{3}, 0, out),
                    collatz::DomainError);
}

TEST_CASE("kernel dispatch") {
    CHECK(kernel_available(KernelKind::scalar));
    CHECK(kernel_available(best_kernel()));
    KernelKind k{};
    CHECK(parse_kernel("avx2", k));
    CHECK(k == KernelKind::avx2);
    CHECK_FALSE(parse_kernel("sse9", k));
    MESSAGE("best kernel on this machine: " << kernel_name(best_kernel()));
}

TEST_CASE("SIMD kernels match scalar on contiguous ranges") {
    std::vector<std::uint64_t> starts;
    for (std::uint64_t x = 1; x <= 100000; ++x) starts.push_back(x);
    check_equivalent(starts, 100000);
}

TEST_CASE("SIMD kernels match scalar for every batch length up to 17") {
    for (std::size_t len = 0; len <= 17; ++len) {
        std::vector<std::uint64_t> starts;
        for (std::size_t i = 0; i < len; ++i) starts.push_back(27 + 2 * i);
        check_equivalent(starts, 1000);
    }
}

TEST_CASE("SIMD kernels match scalar on random starts and budgets") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 40; ++round) {
        std::vector<std::uint64_t> starts(1 + rng() % 300);
        for (auto& s : starts) {
            switch (rng() % 5) {
                case 0: s = 1 + rng() % 1000; break;
                case 1: s = std::uint64_t{1} << (rng() % 64); break;
                case 2: s = kMaxOddOperand - 500 + rng() % 1000; break;  // straddles the lane limit
                case 3: s = 1 + (rng() >> (rng() % 64)); break;
                default: s = rng() | 1; break;                           // mostly overflow
            }
            if (s == 0) s = 1;
        }
        const std::uint64_t budget = 1 + rng() % (round % 2 == 0 ? 20 : 2000);
        check_equivalent(starts, budget);
    }
}
