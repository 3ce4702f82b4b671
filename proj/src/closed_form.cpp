#include "collatz/closed_form.hpp"

#include <numeric>
#include <utility>

#include "collatz/errors.hpp"

namespace collatz {
namespace {

Integer pow2(std::uint64_t e) {
    Integer out;
    mpz_setbit(out.get_mpz_t(), e);
    return out;
}

Integer pow3(std::uint64_t e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 3, e);
    return out;
}

struct ClosedFormParts {
    Integer numerator;    // 3^{n-1} x1 + sum term
    Integer denominator;  // prod_{j=0}^{n-1} 2^{m_j}
};

ClosedFormParts closed_form_parts(const Nat& x1, const RhythmPrefix& prefix) {
    if (x1.is_zero()) throw DomainError("closed form: x1 must be a positive integer (got 0)");
    const auto sizes = prefix.sizes();
    const std::uint64_t n = prefix.n();

    ClosedFormParts p;
    p.numerator = pow3(n - 1) * x1.integer();

    // prod_{j=0}^{i} 2^{m_j} with m_0 = 0 is 2^{m_1 + ... + m_i}.
    std::uint64_t exponent = 0;
    for (std::uint64_t i = 0; i + 2 <= n; ++i) {
        if (i > 0) exponent += sizes[i - 1];
        p.numerator += pow3(n - 2 - i) * pow2(exponent);
    }
    p.denominator = pow2(prefix.total());
    return p;
}

}  // namespace

RhythmPrefix::RhythmPrefix(std::vector<std::uint64_t> sizes) : sizes_(std::move(sizes)) {
    for (auto m : sizes_) {
        if (m == 0) throw DomainError("rhythm prefix entries must be >= 1");
    }
}

RhythmPrefix RhythmPrefix::uniform(std::uint64_t count, std::uint64_t m) {
    return RhythmPrefix(std::vector<std::uint64_t>(count, m));
}

std::uint64_t RhythmPrefix::total() const {
    return std::accumulate(sizes_.begin(), sizes_.end(), std::uint64_t{0});
}

ExactRational xn_closed_form(const Nat& x1, const RhythmPrefix& prefix) {
    auto p = closed_form_parts(x1, prefix);
    return {p.numerator, p.denominator};
}

ExactRational X_value(const Nat& x1, const RhythmPrefix& prefix) {
    auto p = closed_form_parts(x1, prefix);
    return {p.numerator + p.denominator, 4 * p.denominator};
}

bool is_growth_point_by_formula(const Nat& x1, const RhythmPrefix& prefix) {
    if (!xn_closed_form(x1, prefix).is_integer()) {
        throw DomainError("closed form is not integral: the prefix is not the rhythm of x1's orbit");
    }
    return X_value(x1, prefix).is_integer();
}

ExactRational equal_step_X(const Nat& x1, std::uint64_t n, std::uint64_t m) {
    if (x1.is_zero()) throw DomainError("equal_step_X: x1 must be a positive integer (got 0)");
    if (n == 0) throw DomainError("equal_step_X: n must be >= 1");
    if (m == 0) throw DomainError("equal_step_X: m must be >= 1");

    const Integer shift = pow2(m) - 3;  // never zero: 2^m != 3
    const ExactRational quarter{Integer{1}, Integer{4}};
    const ExactRational inv_shift{Integer{1}, shift};
    const ExactRational scale{pow3(n - 1), 4 * pow2(m * (n - 1))};

    return scale * (ExactRational{x1} - inv_shift) + inv_shift * quarter + quarter;
}

}  // namespace collatz
