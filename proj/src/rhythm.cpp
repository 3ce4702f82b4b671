#include "collatz/rhythm.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "collatz/errors.hpp"
#include "collatz/orbit.hpp"

namespace collatz {
namespace {

struct Prefix {
    std::vector<std::uint64_t> sizes;
    bool complete;  // n steps taken without meeting 1
};

Prefix observe_prefix(const Nat& x1, std::uint64_t n) {
    if (x1.is_zero()) throw DomainError("rhythm: x1 must be a positive integer (got 0)");
    Prefix p{{}, false};
    p.sizes.reserve(n);
    Nat x = x1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (x.is_one()) return p;
        OrbitStep s = col_step(x);
        p.sizes.push_back(s.step_size);
        x = std::move(s.value);
    }
    p.complete = true;
    return p;
}

}  // namespace

Rhythm::Rhythm(std::vector<std::uint64_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw DomainError("a rhythm has at least one step");
    if (std::any_of(sizes_.begin(), sizes_.end(), [](auto m) { return m == 0; })) {
        throw DomainError("rhythm entries must be >= 1");
    }
}

bool ClassEnumeration::all_verified() const {
    return std::all_of(members.begin(), members.end(), [](const auto& m) { return m.verified; });
}

std::vector<Nat> ClassEnumeration::starts() const {
    std::vector<Nat> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.start);
    return out;
}

Rhythm rhythm_of(const Nat& x1, std::uint64_t n) {
    if (n == 0) throw DomainError("rhythm_of: n must be >= 1");
    Prefix p = observe_prefix(x1, n);
    if (!p.complete) {
        throw OrbitTooShort("orbit of " + x1.to_string() + " reaches 1 after " +
                            std::to_string(p.sizes.size()) + " step(s), fewer than n=" +
                            std::to_string(n));
    }
    return Rhythm(std::move(p.sizes));
}

RhythmClass class_of(const Nat& x1, std::uint64_t n) {
    Rhythm r = rhythm_of(x1, n);
    const auto sizes = r.sizes();
    const std::uint64_t exponent =
        std::accumulate(sizes.begin(), sizes.end() - 1, std::uint64_t{0});
    return {x1, n, std::move(r), Nat::pow2(exponent + 2)};
}

ClassEnumeration enumerate_class(const RhythmClass& cls, std::uint64_t count) {
    if (count == 0) throw DomainError("enumerate_class: count must be >= 1");
    ClassEnumeration out{cls, {}};
    out.members.reserve(count);
    const auto expected = cls.rhythm.sizes();
    Nat start = cls.base;
    for (std::uint64_t r = 0; r < count; ++r) {
        Prefix p = observe_prefix(start, cls.n);
        ClassMember m{start, r, false, std::move(p.sizes), {}};
        if (!p.complete) {
            m.diagnostic = "orbit reaches 1 after " + std::to_string(m.observed.size()) + " step(s)";
        } else if (!std::equal(m.observed.begin(), m.observed.end(), expected.begin(), expected.end())) {
            const auto at = std::mismatch(m.observed.begin(), m.observed.end(), expected.begin()).first;
            m.diagnostic = "rhythm differs at step " + std::to_string(at - m.observed.begin() + 1);
        } else {
            m.verified = true;
        }
        out.members.push_back(std::move(m));
        start += cls.modulus;
    }
    return out;
}

bool same_rhythm(const Nat& a, const Nat& b, std::uint64_t n) {
    return rhythm_of(a, n) == rhythm_of(b, n);
}

}  // namespace collatz
