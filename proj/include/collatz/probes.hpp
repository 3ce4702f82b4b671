#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "collatz/nat.hpp"
#include "collatz/range_kernel.hpp"

namespace collatz {

enum class ProbeStatus { cycle_found, inconclusive };

struct CycleReport {
    Nat start;
    ProbeStatus status = ProbeStatus::inconclusive;
    std::vector<Nat> cycle_members;  // odd values, starting at the cycle entry
    bool is_trivial = false;         // the cycle is {1}
    std::uint64_t steps = 0;         // col_step applications spent on detection

    [[nodiscard]] bool cycle_found() const { return status == ProbeStatus::cycle_found; }
};

struct GrowthCensus {
    Nat start;
    std::uint64_t horizon = 0;
    std::vector<std::uint64_t> growth_indices;  // 1-based orbit positions i with Col(x_i) > x_i
    std::vector<Nat> y_values;                  // (x_i - 3) / 4 for each index
    std::uint64_t distinct_y = 0;
    std::uint64_t examined = 0;  // how many of x_1..x_horizon were looked at
    bool terminated = false;     // stopped early because the orbit hit 1
};

struct RangeSummary {
    Nat lo;
    Nat hi;
    bool all_converged = true;
    Nat max_excursion;  // largest odd value met by any orbit in the range
    Nat worst_start;    // smallest start attaining max_excursion
    std::uint64_t total_steps = 0;
    std::uint64_t unconverged = 0;
    std::optional<Nat> first_unconverged;

    friend bool operator==(const RangeSummary&, const RangeSummary&) = default;
};

/// Brent cycle detection on the accelerated map, at most `max_steps`
/// col_step applications. Reaching 1 reports the trivial cycle at once.
/// Reported cycles are re-checked by walking them with col_step.
[[nodiscard]] CycleReport cycle_probe(const Nat& x1, std::uint64_t max_steps);

/// Looks at x_1 .. x_horizon (stopping at 1) and records every growth point.
[[nodiscard]] GrowthCensus growth_census(const Nat& x1, std::uint64_t horizon);

/// Walks every start in [lo, hi] to 1 with at most `step_budget` col_steps
/// each, across `workers` threads. The summary depends only on (lo, hi,
/// step_budget), never on worker count or kernel.
[[nodiscard]] RangeSummary verify_range(const Nat& lo, const Nat& hi, std::uint64_t step_budget,
                                        unsigned workers,
                                        kernels::KernelKind kernel = kernels::KernelKind::automatic);

}  // namespace collatz
