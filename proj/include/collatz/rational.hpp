#pragma once

#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "collatz/nat.hpp"

namespace collatz {

/// Exact signed fraction, always in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(const Integer& whole);  // NOLINT(google-explicit-constructor)
    ExactRational(const Integer& numerator, const Integer& denominator);
    ExactRational(const Nat& whole) : ExactRational(whole.integer()) {}  // NOLINT

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string to_string() const;

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);  // throws DomainError on zero

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return cmp(a.value_, b.value_) == 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& r);

private:
    mpq_class value_{0};
};

}  // namespace collatz
