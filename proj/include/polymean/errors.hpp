#pragma once

#include <stdexcept>
#include <string>

namespace polymean {

/// Violated parameter constraint (problem tuple, quadrature size, sample count).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside an operation's domain (singular point, impure polynomial, window).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configured size limit was exceeded (degree cap, matrix dimension).
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Floating-point procedure could not produce a meaningful value.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace polymean
