#include "collatz/rational.hpp"

#include <ostream>

#include "collatz/errors.hpp"

namespace collatz {

ExactRational::ExactRational(const Integer& whole) : value_(whole) {}

ExactRational::ExactRational(const Integer& numerator, const Integer& denominator) {
    if (sgn(denominator) == 0) throw DomainError("rational with zero denominator");
    value_.get_num() = numerator;
    value_.get_den() = denominator;
    value_.canonicalize();
}

std::string ExactRational::to_string() const {
    if (is_integer()) return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (sgn(rhs.value_) == 0) throw DomainError("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.to_string(); }

}  // namespace collatz
