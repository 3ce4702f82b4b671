#include "collatz/orbit.hpp"

#include "collatz/errors.hpp"

namespace collatz {

std::vector<std::uint64_t> OrbitRecord::step_sizes() const {
    std::vector<std::uint64_t> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.step_size);
    return out;
}

OrbitStep col_step(const Nat& x) {
    if (x.is_zero()) throw DomainError("col_step: x must be a positive integer (got 0)");
    Nat next = x;
    if (x.is_odd()) {
        next = (x << 1) + x + Nat{1};
    }
    const std::uint64_t v = next.trailing_zeros();
    next >>= v;
    return {std::move(next), v};
}

OrbitRecord orbit(const Nat& x1, std::uint64_t max_steps) {
    if (x1.is_zero()) throw DomainError("orbit: x1 must be a positive integer (got 0)");
    if (max_steps == 0) throw DomainError("orbit: max_steps must be at least 1");
    OrbitRecord rec{x1, {}, false};
    Nat x = x1;
    for (std::uint64_t i = 0; i < max_steps; ++i) {
        OrbitStep s = col_step(x);
        x = s.value;
        rec.steps.push_back(std::move(s));
        if (x.is_one()) {
            rec.terminated = true;
            break;
        }
    }
    return rec;
}

bool is_growth_point(const Nat& x) { return col_step(x).value > x; }

GrowthClass classify_mod4(const Nat& x) {
    if (x.is_zero()) throw DomainError("classify_mod4: x must be a positive integer (got 0)");
    const unsigned r = x.mod4();
    return {r, r == 3};
}

}  // namespace collatz
