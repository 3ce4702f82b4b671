#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace collatz {

// Signed arbitrary-precision integer used for intermediate algebra.
using Integer = mpz_class;

/// Arbitrary-precision non-negative integer.
///
/// Every orbit value lives in a Nat; there is no fixed width anywhere on the
/// orbit path. Subtraction that would go negative throws DomainError.
class Nat {
public:
    Nat() = default;
    Nat(std::uint64_t v);  // NOLINT(google-explicit-constructor)
    explicit Nat(const Integer& v);
    explicit Nat(Integer&& v);

    /// Plain decimal digits only. No sign, no whitespace, no exponent syntax.
    static Nat parse(std::string_view text);
    static std::optional<Nat> try_parse(std::string_view text);

    static Nat pow2(std::uint64_t exponent);
    static Nat pow3(std::uint64_t exponent);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
    [[nodiscard]] bool is_even() const { return !is_odd(); }

    /// Residue modulo 4, read from the two low bits.
    [[nodiscard]] unsigned mod4() const;

    /// 2-adic valuation. Undefined for zero (throws DomainError).
    [[nodiscard]] std::uint64_t trailing_zeros() const;

    [[nodiscard]] std::size_t bit_length() const;
    [[nodiscard]] bool fits_u64() const;
    [[nodiscard]] std::uint64_t to_u64() const;  // throws std::overflow_error

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] const Integer& integer() const { return value_; }

    Nat& operator+=(const Nat& rhs);
    Nat& operator-=(const Nat& rhs);
    Nat& operator*=(const Nat& rhs);
    Nat& operator<<=(std::uint64_t bits);
    Nat& operator>>=(std::uint64_t bits);

    friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
    friend Nat operator-(Nat lhs, const Nat& rhs) { return lhs -= rhs; }
    friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }
    friend Nat operator<<(Nat lhs, std::uint64_t bits) { return lhs <<= bits; }
    friend Nat operator>>(Nat lhs, std::uint64_t bits) { return lhs >>= bits; }

    /// Floor division and remainder; divisor must be non-zero.
    friend Nat operator/(const Nat& lhs, const Nat& rhs);
    friend Nat operator%(const Nat& lhs, const Nat& rhs);

    friend bool operator==(const Nat& a, const Nat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Nat& n);

private:
    Integer value_{0};
};

}  // namespace collatz
