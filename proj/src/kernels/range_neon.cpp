#include "collatz/range_kernel.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <array>
#include <cassert>

#include "lane.hpp"

namespace collatz::kernels {
namespace {

constexpr int kLanes = 2;

struct LanePool {
    std::span<const std::uint64_t> starts;
    std::span<OrbitStat> out;
    std::uint64_t budget;
    std::size_t next = 0;

    std::array<std::uint64_t, kLanes> x{};
    std::array<std::uint64_t, kLanes> steps{};
    std::array<std::uint64_t, kLanes> peak{};
    std::array<std::size_t, kLanes> owner{};

    bool refill(int lane) {
        while (next < starts.size()) {
            const std::size_t i = next++;
            detail::Lane s{};
            if (detail::prime_lane(starts[i], budget, s, out[i])) continue;
            x[lane] = s.x;
            steps[lane] = s.steps;
            peak[lane] = s.peak;
            owner[lane] = i;
            return true;
        }
        x[lane] = steps[lane] = peak[lane] = 0;
        return false;
    }

    void retire(int lane) {
        const detail::Lane s{x[lane], steps[lane], peak[lane]};
        [[maybe_unused]] const bool done = detail::finished_at_odd(s, budget, out[owner[lane]]);
        assert(done);
    }
};

}  // namespace

void orbit_kernel_neon(std::span<const std::uint64_t> starts, std::uint64_t budget,
                       std::span<OrbitStat> out) {
    LanePool pool{starts, out, budget};
    int live = 0;
    for (int lane = 0; lane < kLanes; ++lane) live += pool.refill(lane) ? 1 : 0;

    const uint64x2_t one = vdupq_n_u64(1);
    const uint64x2_t limit = vdupq_n_u64(kMaxOddOperand);
    const uint64x2_t cap = vdupq_n_u64(budget);

    uint64x2_t x = vld1q_u64(pool.x.data());
    uint64x2_t steps = vld1q_u64(pool.steps.data());
    uint64x2_t peak = vld1q_u64(pool.peak.data());

    while (live > 0) {
        const uint64x2_t odd = vceqq_u64(vandq_u64(x, one), one);

        peak = vbslq_u64(vandq_u64(odd, vcgtq_u64(x, peak)), x, peak);

        const uint64x2_t stop =
            vorrq_u64(vceqq_u64(x, one), vorrq_u64(vceqq_u64(steps, cap), vcgtq_u64(x, limit)));
        const uint64x2_t fin = vandq_u64(odd, stop);
        const int finished = static_cast<int>((vgetq_lane_u64(fin, 0) & 1) |
                                              ((vgetq_lane_u64(fin, 1) & 1) << 1));

        if (finished != 0) {
            vst1q_u64(pool.x.data(), x);
            vst1q_u64(pool.steps.data(), steps);
            vst1q_u64(pool.peak.data(), peak);
            for (int lane = 0; lane < kLanes; ++lane) {
                if ((finished >> lane) & 1) {
                    pool.retire(lane);
                    if (!pool.refill(lane)) --live;
                }
            }
            x = vld1q_u64(pool.x.data());
            steps = vld1q_u64(pool.steps.data());
            peak = vld1q_u64(pool.peak.data());
            continue;
        }

        const uint64x2_t half = vshrq_n_u64(x, 1);
        const uint64x2_t up = vaddq_u64(vaddq_u64(x, half), one);
        x = vbslq_u64(odd, up, half);
        steps = vsubq_u64(steps, odd);
    }
}

}  // namespace collatz::kernels

#endif
