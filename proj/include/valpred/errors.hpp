#pragma once

#include <stdexcept>
#include <string>

namespace valpred {

// Malformed or inconsistent input (bad poll file, unknown label, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numeric argument outside the domain of an operation (alpha, lambda, price, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Model too large to enumerate exactly.
class EnumerationSizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace valpred
