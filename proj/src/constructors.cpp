#include "collatz/constructors.hpp"

#include <string>

#include "collatz/errors.hpp"
#include "collatz/orbit.hpp"

namespace collatz {
namespace {

// Iterates n steps from spec.start, records what happens and throws unless
// every step has size exactly spec.m, the direction holds strictly, and the
// endpoint matches the prediction.
void verify_by_iteration(MonotoneSpec& spec) {
    const char* what = spec.direction == Direction::increasing ? "increasing" : "decreasing";
    auto fail = [&](const std::string& why) {
        throw VerificationFailure(std::string(what) + " construction (n=" + std::to_string(spec.n) +
                                  ", m=" + std::to_string(spec.m) + ", x1=" + spec.start.to_string() +
                                  "): " + why);
    };

    spec.sequence.clear();
    spec.step_sizes.clear();
    spec.sequence.push_back(spec.start);
    Nat x = spec.start;
    for (std::uint64_t i = 0; i < spec.n; ++i) {
        if (x.is_even()) fail("x_" + std::to_string(i + 1) + " is even");
        OrbitStep s = col_step(x);
        if (s.step_size != spec.m) {
            fail("step " + std::to_string(i + 1) + " has size " + std::to_string(s.step_size));
        }
        const bool ok = spec.direction == Direction::increasing ? s.value > x : s.value < x;
        if (!ok) fail("step " + std::to_string(i + 1) + " is not strictly monotone");
        spec.step_sizes.push_back(s.step_size);
        spec.sequence.push_back(s.value);
        x = std::move(s.value);
    }
    if (x != spec.predicted_final) {
        fail("final value " + x.to_string() + " != predicted " + spec.predicted_final.to_string());
    }
}

}  // namespace

MonotoneSpec construct_increasing(std::uint64_t n, const Nat& K) {
    if (n == 0) throw DomainError("construct_increasing: n must be >= 1");
    if (K.is_zero()) throw DomainError("construct_increasing: K must be >= 1");

    MonotoneSpec spec{Direction::increasing, n, 1, K, {}, {}, {}, {}};
    spec.start = K * Nat::pow2(n + 1) - Nat{1};
    spec.predicted_final = Nat{6} * K * Nat::pow3(n - 1) - Nat{1};
    verify_by_iteration(spec);
    return spec;
}

MonotoneSpec construct_decreasing(std::uint64_t n, std::uint64_t m) {
    return construct_decreasing(n, m, 0);
}

MonotoneSpec construct_decreasing(std::uint64_t n, std::uint64_t m, std::uint64_t family_index) {
    if (n == 0) throw DomainError("construct_decreasing: n must be >= 1");
    if (m < 2) throw DomainError("construct_decreasing: m must be >= 2 (m = 1 steps increase)");

    const Integer d = Nat::pow2(m).integer() - 3;

    // K'_0 = -3^{-n} mod d, taken in [1, d].
    Integer k;
    if (d == 1) {
        k = 1;
    } else {
        Integer inv;
        const Integer three_n = Nat::pow3(n).integer();
        if (mpz_invert(inv.get_mpz_t(), three_n.get_mpz_t(), d.get_mpz_t()) == 0) {
            throw VerificationFailure("3^n has no inverse modulo 2^m - 3");
        }
        k = d - inv;  // inv in [1, d-1] so this is in [1, d-1]
    }
    if (mpz_odd_p(k.get_mpz_t())) k += d;
    k += 2 * d * Integer(static_cast<unsigned long>(family_index));

    const Nat multiplier{k};
    const Nat divisor{d};
    // x_1 = (K' 2^{mn} + 1) / d,  x_{n+1} = (K' 3^n + 1) / d
    const Nat u1_plus_1 = multiplier * Nat::pow2(m * n) + Nat{1};
    const Nat final_plus = multiplier * Nat::pow3(n) + Nat{1};
    if (!(u1_plus_1 % divisor).is_zero() || !(final_plus % divisor).is_zero()) {
        throw VerificationFailure("decreasing construction: residue condition on K' does not hold");
    }

    MonotoneSpec spec{Direction::decreasing, n, m, multiplier, u1_plus_1 / divisor,
                      final_plus / divisor, {}, {}};
    verify_by_iteration(spec);
    return spec;
}

}  // namespace collatz
