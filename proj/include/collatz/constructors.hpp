#pragma once

#include <cstdint>
#include <vector>

#include "collatz/nat.hpp"

namespace collatz {

enum class Direction { increasing, decreasing };

/// A start value whose first n accelerated steps all remove exactly m powers
/// of two and move strictly in one direction. Every instance handed out by
/// the constructors below has been checked by iterating col_step.
struct MonotoneSpec {
    Direction direction;
    std::uint64_t n;
    std::uint64_t m;
    Nat multiplier;   // K for increasing, K' for decreasing
    Nat start;        // x_1
    Nat predicted_final;  // x_{n+1} from the closed formula
    std::vector<Nat> sequence;  // x_1 .. x_{n+1}, observed by iteration
    std::vector<std::uint64_t> step_sizes;  // observed, n entries
};

/// x1 = K * 2^{n+1} - 1. The first n steps have step size 1, climb strictly,
/// and end at x_{n+1} = 6K * 3^{n-1} - 1.
[[nodiscard]] MonotoneSpec construct_increasing(std::uint64_t n, const Nat& K);

/// Smallest member of the decreasing family for (n, m), m >= 2.
///
/// With d = 2^m - 3 and u = d*x - 1 the step x -> (3x+1)/2^m becomes
/// u -> 3u/2^m. Taking u_1 = K' * 2^{mn} makes u_i = K' 3^{i-1} 2^{m(n-i+1)},
/// so x_i = (u_i + 1)/d. Integrality of x_1 needs K' 2^{mn} == -1 (mod d),
/// equivalently K' == -3^{-n} (mod d) since 2^m == 3 (mod d). x_2..x_{n+1}
/// are then integral, and x_1..x_n are odd because u_i is even. The last step
/// has valuation exactly m iff x_{n+1} = (K' 3^n + 1)/d is odd, i.e. K' is
/// even; d is odd, so exactly one of K'_0 and K'_0 + d qualifies.
[[nodiscard]] MonotoneSpec construct_decreasing(std::uint64_t n, std::uint64_t m);

/// The t-th member of the same family: K' shifted by 2*d*t, which keeps both
/// the residue mod d and the parity. t = 0 is construct_decreasing(n, m).
[[nodiscard]] MonotoneSpec construct_decreasing(std::uint64_t n, std::uint64_t m,
                                                std::uint64_t family_index);

}  // namespace collatz
