#include "collatz/nat.hpp"

#include <ostream>
#include <stdexcept>

#include "collatz/errors.hpp"

namespace collatz {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "Nat assumes an LP64 platform for u64 <-> mpz conversion");

Nat::Nat(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}

Nat::Nat(const Integer& v) : value_(v) {
    if (sgn(value_) < 0) throw DomainError("Nat cannot hold a negative value");
}

Nat::Nat(Integer&& v) : value_(std::move(v)) {
    if (sgn(value_) < 0) throw DomainError("Nat cannot hold a negative value");
}

std::optional<Nat> Nat::try_parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
    }
    Nat out;
    if (out.value_.set_str(std::string(text), 10) != 0) return std::nullopt;
    return out;
}

Nat Nat::parse(std::string_view text) {
    auto n = try_parse(text);
    if (!n) throw DomainError("not a non-negative decimal integer: '" + std::string(text) + "'");
    return *std::move(n);
}

Nat Nat::pow2(std::uint64_t exponent) {
    Nat out;
    mpz_setbit(out.value_.get_mpz_t(), exponent);
    return out;
}

Nat Nat::pow3(std::uint64_t exponent) {
    Nat out;
    mpz_ui_pow_ui(out.value_.get_mpz_t(), 3, exponent);
    return out;
}

unsigned Nat::mod4() const {
    return static_cast<unsigned>(mpz_fdiv_ui(value_.get_mpz_t(), 4));
}

std::uint64_t Nat::trailing_zeros() const {
    if (is_zero()) throw DomainError("2-adic valuation of 0 is undefined");
    return mpz_scan1(value_.get_mpz_t(), 0);
}

std::size_t Nat::bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool Nat::fits_u64() const { return value_.fits_ulong_p(); }

std::uint64_t Nat::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("Nat does not fit in 64 bits: " + to_string());
    return value_.get_ui();
}

std::string Nat::to_string() const { return value_.get_str(10); }

Nat& Nat::operator+=(const Nat& rhs) {
    value_ += rhs.value_;
    return *this;
}

Nat& Nat::operator-=(const Nat& rhs) {
    if (cmp(value_, rhs.value_) < 0) throw DomainError("Nat subtraction underflow");
    value_ -= rhs.value_;
    return *this;
}

Nat& Nat::operator*=(const Nat& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Nat& Nat::operator<<=(std::uint64_t bits) {
    mpz_mul_2exp(value_.get_mpz_t(), value_.get_mpz_t(), bits);
    return *this;
}

Nat& Nat::operator>>=(std::uint64_t bits) {
    mpz_fdiv_q_2exp(value_.get_mpz_t(), value_.get_mpz_t(), bits);
    return *this;
}

Nat operator/(const Nat& lhs, const Nat& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    Nat out;
    mpz_fdiv_q(out.value_.get_mpz_t(), lhs.value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return out;
}

Nat operator%(const Nat& lhs, const Nat& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    Nat out;
    mpz_fdiv_r(out.value_.get_mpz_t(), lhs.value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.to_string(); }

}  // namespace collatz
