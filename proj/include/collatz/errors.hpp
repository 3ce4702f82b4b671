#pragma once

#include <stdexcept>
#include <string>

namespace collatz {

// Input lies outside an operation's domain (x = 0, m < 2, lo > hi, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The orbit reached 1 before the requested number of steps.
class OrbitTooShort : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A constructed artifact failed its own iteration check. Seeing this means the
// construction (or the arithmetic underneath it) is wrong.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace collatz
