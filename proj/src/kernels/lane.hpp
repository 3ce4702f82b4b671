#pragma once

// Per-lane bookkeeping shared by every orbit kernel. Vector kernels run the
// half-step map (odd: (3x+1)/2, even: x/2) and only stop at odd values, which
// are exactly the col_step boundaries; these helpers decide what happens at
// such a boundary so that all kernels agree bit for bit.

#include <algorithm>
#include <cstdint>

#include "collatz/range_kernel.hpp"

namespace collatz::kernels::detail {

struct Lane {
    std::uint64_t x;
    std::uint64_t steps;
    std::uint64_t peak;
};

// Decides whether an odd lane value ends the orbit. Check order matters:
// reaching 1 wins over an exhausted budget, which wins over overflow.
inline bool finished_at_odd(const Lane& s, std::uint64_t budget, OrbitStat& out) {
    if (s.x == 1) {
        out = {s.steps, s.peak, OrbitStatus::converged};
        return true;
    }
    if (s.steps >= budget) {
        out = {s.steps, s.peak, OrbitStatus::exhausted};
        return true;
    }
    if (s.x > kMaxOddOperand) {
        out = {s.steps, s.peak, OrbitStatus::overflow};
        return true;
    }
    return false;
}

// Brings a fresh start to its first odd value. An even start costs one
// col_step (pure halving). Returns true if the orbit is already decided.
inline bool prime_lane(std::uint64_t start, std::uint64_t budget, Lane& s, OrbitStat& out) {
    if ((start & 1) != 0) {
        s = {start, 0, start};
    } else {
        const std::uint64_t odd = start >> __builtin_ctzll(start);
        s = {odd, 1, odd};
    }
    return finished_at_odd(s, budget, out);
}

// One full col_step on an odd value known to be <= kMaxOddOperand.
inline void scalar_col_step(Lane& s) {
    const std::uint64_t y = 3 * s.x + 1;
    s.x = y >> __builtin_ctzll(y);
    ++s.steps;
    s.peak = std::max(s.peak, s.x);
}

}  // namespace collatz::kernels::detail
