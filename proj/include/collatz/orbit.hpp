#pragma once

#include <cstdint>
#include <vector>

#include "collatz/nat.hpp"

namespace collatz {

struct OrbitStep {
    Nat value;               // odd
    std::uint64_t step_size; // powers of two removed to reach `value`
};

struct OrbitRecord {
    Nat start;
    std::vector<OrbitStep> steps;
    bool terminated = false;  // the last step landed on 1

    [[nodiscard]] std::vector<std::uint64_t> step_sizes() const;
};

struct GrowthClass {
    unsigned residue;  // x mod 4
    bool is_growth;    // residue == 3
};

/// One application of the accelerated map.
///
/// Odd x:  (3x+1) / 2^v with v = v2(3x+1).
/// Even x: x / 2^v with v = v2(x); no 3x+1 is applied.
/// col_step(1) == (1, 2), the 4 -> 2 -> 1 loop. Throws DomainError for 0.
[[nodiscard]] OrbitStep col_step(const Nat& x);

/// Iterates col_step from x1 until `max_steps` steps have been taken or the
/// value 1 is produced. There is no unbounded variant.
[[nodiscard]] OrbitRecord orbit(const Nat& x1, std::uint64_t max_steps);

/// Col(x) > x, decided by computing Col(x). Does not use the residue shortcut.
[[nodiscard]] bool is_growth_point(const Nat& x);

[[nodiscard]] GrowthClass classify_mod4(const Nat& x);

}  // namespace collatz
