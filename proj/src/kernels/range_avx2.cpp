#include "collatz/range_kernel.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <array>
#include <cassert>

#include "lane.hpp"

namespace collatz::kernels {
namespace {

constexpr int kLanes = 8;  // two independent vectors of four

// Lane bookkeeping that lives outside the vector registers. Touched only when
// some lane finishes.
struct LanePool {
    std::span<const std::uint64_t> starts;
    std::span<OrbitStat> out;
    std::uint64_t budget;
    std::size_t next = 0;

    alignas(32) std::array<std::uint64_t, kLanes> x{};
    alignas(32) std::array<std::uint64_t, kLanes> steps{};
    alignas(32) std::array<std::uint64_t, kLanes> peak{};
    alignas(32) std::array<std::uint64_t, kLanes> active{};  // all ones or zero
    std::array<std::size_t, kLanes> owner{};

    // Loads the next undecided start into `lane`, or parks it (x = 1,
    // inactive) once the batch is exhausted.
    bool refill(int lane) {
        while (next < starts.size()) {
            const std::size_t i = next++;
            detail::Lane s{};
            if (detail::prime_lane(starts[i], budget, s, out[i])) continue;
            x[lane] = s.x;
            steps[lane] = s.steps;
            peak[lane] = s.peak;
            owner[lane] = i;
            active[lane] = ~std::uint64_t{0};
            return true;
        }
        x[lane] = 1;
        steps[lane] = peak[lane] = active[lane] = 0;
        return false;
    }

    void retire(int lane) {
        const detail::Lane s{x[lane], steps[lane], peak[lane]};
        [[maybe_unused]] const bool done = detail::finished_at_odd(s, budget, out[owner[lane]]);
        assert(done);
    }
};

}  // namespace

using Row = std::array<std::uint64_t, kLanes>;

__attribute__((target("avx2"))) static inline __m256i load(const Row& r, int half) {
    return _mm256_load_si256(reinterpret_cast<const __m256i*>(r.data() + 4 * half));
}

__attribute__((target("avx2"))) static inline void store(Row& r, int half, __m256i v) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(r.data() + 4 * half), v);
}

// Trailing-zero count of each 64-bit lane of a non-zero y. The lowest set bit
// is isolated and both 32-bit halves are converted to float; the exponent of
// the non-zero half is the bit index (the zero half reads as -127).
__attribute__((target("avx2"))) static inline __m256i ctz_epi64(__m256i y) {
    const __m256i low_bit = _mm256_and_si256(y, _mm256_sub_epi64(_mm256_setzero_si256(), y));
    const __m256i bits = _mm256_castps_si256(_mm256_cvtepi32_ps(low_bit));
    __m256i e = _mm256_and_si256(_mm256_srli_epi32(bits, 23), _mm256_set1_epi32(0xFF));
    e = _mm256_sub_epi32(e, _mm256_set1_epi32(127));
    e = _mm256_add_epi32(e, _mm256_set1_epi64x(std::int64_t{32} << 32));  // high half counts from 32
    e = _mm256_max_epi32(e, _mm256_shuffle_epi32(e, 0xB1));
    return _mm256_and_si256(e, _mm256_set1_epi64x(0xFFFFFFFF));
}

namespace {

struct Vec {
    __m256i x, steps, peak, active;
};

__attribute__((target("avx2"))) inline Vec load_vec(const LanePool& pool, int half) {
    return {load(pool.x, half), load(pool.steps, half), load(pool.peak, half),
            load(pool.active, half)};
}

__attribute__((target("avx2"))) inline void store_vec(LanePool& pool, int half, const Vec& v) {
    store(pool.x, half, v.x);
    store(pool.steps, half, v.steps);
    store(pool.peak, half, v.peak);
}

// One col_step on every lane of v; returns the movemask of active lanes that
// just finished.
__attribute__((target("avx2"))) inline int advance(Vec& v, __m256i one, __m256i cap,
                                                   __m256i limit) {
    const __m256i y = _mm256_add_epi64(_mm256_add_epi64(v.x, _mm256_slli_epi64(v.x, 1)), one);
    v.x = _mm256_srlv_epi64(y, ctz_epi64(y));
    v.steps = _mm256_add_epi64(v.steps, one);
    v.peak = _mm256_blendv_epi8(v.peak, v.x, _mm256_cmpgt_epi64(v.x, v.peak));
    const __m256i stop = _mm256_or_si256(
        _mm256_cmpeq_epi64(v.x, one),
        _mm256_or_si256(_mm256_cmpeq_epi64(v.steps, cap), _mm256_cmpgt_epi64(v.x, limit)));
    return _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_and_si256(v.active, stop)));
}

// Writes back the lanes of `half` flagged in `finished`, refills them and
// returns the reloaded vector.
__attribute__((target("avx2"))) inline Vec settle(LanePool& pool, int half, const Vec& v,
                                                  int finished) {
    store_vec(pool, half, v);
    for (int i = 0; i < 4; ++i) {
        if ((finished >> i) & 1) {
            pool.retire(4 * half + i);
            pool.refill(4 * half + i);
        }
    }
    return load_vec(pool, half);
}

}  // namespace

__attribute__((target("avx2")))
void orbit_kernel_avx2(std::span<const std::uint64_t> starts, std::uint64_t budget,
                       std::span<OrbitStat> out) {
    LanePool pool{starts, out, budget};
    for (int lane = 0; lane < kLanes; ++lane) pool.refill(lane);

    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i limit = _mm256_set1_epi64x(static_cast<long long>(kMaxOddOperand));
    const __m256i cap = _mm256_set1_epi64x(static_cast<long long>(budget));

    // Every active lane holds an odd, undecided value, so each pass is one
    // col_step per lane.
    Vec a = load_vec(pool, 0), b = load_vec(pool, 1);
    while (!_mm256_testz_si256(_mm256_or_si256(a.active, b.active), _mm256_set1_epi64x(-1))) {
        const int fa = advance(a, one, cap, limit);
        const int fb = advance(b, one, cap, limit);
        if ((fa | fb) == 0) continue;
        if (fa != 0) a = settle(pool, 0, a, fa);
        if (fb != 0) b = settle(pool, 1, b, fb);
    }
}

}  // namespace collatz::kernels

#endif
