#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "collatz/nat.hpp"
#include "collatz/rational.hpp"

namespace collatz {

/// Step sizes <m_1, ..., m_{n-1}> feeding the closed form for x_n.
/// Empty for n = 1. Every entry must be >= 1.
class RhythmPrefix {
public:
    RhythmPrefix() = default;
    explicit RhythmPrefix(std::vector<std::uint64_t> sizes);
    RhythmPrefix(std::initializer_list<std::uint64_t> sizes)
        : RhythmPrefix(std::vector<std::uint64_t>(sizes)) {}

    static RhythmPrefix uniform(std::uint64_t count, std::uint64_t m);

    [[nodiscard]] std::span<const std::uint64_t> sizes() const { return sizes_; }
    /// n, the index of the orbit element this prefix leads to.
    [[nodiscard]] std::uint64_t n() const { return sizes_.size() + 1; }
    [[nodiscard]] std::uint64_t total() const;

private:
    std::vector<std::uint64_t> sizes_;
};

/// x_n = (3^{n-1} x1 + sum_{i=0}^{n-2} 3^{n-2-i} prod_{j=0}^{i} 2^{m_j}) / prod_{j=0}^{n-1} 2^{m_j}
/// with 2^{m_0} = 1. Integral whenever the prefix is x1's actual rhythm.
[[nodiscard]] ExactRational xn_closed_form(const Nat& x1, const RhythmPrefix& prefix);

/// X(x1, n, m_1..m_{n-1}) = y_n + 1, i.e. (x_n + 1) / 4 written over the
/// common denominator 4 * prod 2^{m_j}. An integer exactly when x_n = 4y+3.
[[nodiscard]] ExactRational X_value(const Nat& x1, const RhythmPrefix& prefix);

/// Growth test at x_n via integrality of X. `prefix` must be x1's true rhythm
/// prefix; a prefix that yields a non-integral x_n throws DomainError.
[[nodiscard]] bool is_growth_point_by_formula(const Nat& x1, const RhythmPrefix& prefix);

/// X with every step size equal to m, evaluated through the geometric-series
/// form
///   3^{n-1} / (4 (2^m)^{n-1}) * (x1 - 1/(2^m - 3)) + 1/(4 (2^m - 3)) + 1/4.
/// 2^m - 3 is -1 for m = 1; the arithmetic is signed throughout.
[[nodiscard]] ExactRational equal_step_X(const Nat& x1, std::uint64_t n, std::uint64_t m);

}  // namespace collatz
