#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "collatz/nat.hpp"

namespace collatz {

/// Non-empty sequence of step sizes <m_1, ..., m_n>, each >= 1.
class Rhythm {
public:
    explicit Rhythm(std::vector<std::uint64_t> sizes);
    Rhythm(std::initializer_list<std::uint64_t> sizes)
        : Rhythm(std::vector<std::uint64_t>(sizes)) {}

    [[nodiscard]] std::span<const std::uint64_t> sizes() const { return sizes_; }
    [[nodiscard]] std::uint64_t length() const { return sizes_.size(); }
    [[nodiscard]] std::uint64_t last() const { return sizes_.back(); }

    friend bool operator==(const Rhythm&, const Rhythm&) = default;

private:
    std::vector<std::uint64_t> sizes_;
};

/// Starts base + R*D (R >= 0) that are expected to share the length-n rhythm
/// of `base`, with D = 4 * 2^{m_1 + ... + m_{n-1}}.
struct RhythmClass {
    Nat base;
    std::uint64_t n;
    Rhythm rhythm;
    Nat modulus;
};

struct ClassMember {
    Nat start;
    std::uint64_t offset;  // R
    bool verified;         // rhythm_of(start, n) == class rhythm
    std::vector<std::uint64_t> observed;  // first step sizes actually seen (may be shorter than n)
    std::string diagnostic;  // empty when verified
};

struct ClassEnumeration {
    RhythmClass cls;
    std::vector<ClassMember> members;

    [[nodiscard]] bool all_verified() const;
    [[nodiscard]] std::vector<Nat> starts() const;
};

/// The first n step sizes of x1's orbit. Throws OrbitTooShort when any of
/// x_1..x_n is 1, i.e. the orbit is already in the trivial cycle before the
/// n-th step.
[[nodiscard]] Rhythm rhythm_of(const Nat& x1, std::uint64_t n);

[[nodiscard]] RhythmClass class_of(const Nat& x1, std::uint64_t n);

/// base, base + D, ..., base + (count-1) D. Each member is checked by
/// iteration; failures stay in the result with a diagnostic.
[[nodiscard]] ClassEnumeration enumerate_class(const RhythmClass& cls, std::uint64_t count);

[[nodiscard]] bool same_rhythm(const Nat& a, const Nat& b, std::uint64_t n);

}  // namespace collatz
