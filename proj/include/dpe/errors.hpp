#pragma once

#include <stdexcept>
#include <string>

namespace dpe {

/// Invalid scheme parameters or inputs that violate an operation's precondition.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic outside an operation's domain (e.g. inverting zero in GF(p)).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Internal contradiction detected by a checker: two codewords inside a
/// decoding sphere with different prefixes, or a checked-arithmetic overflow.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An exhaustive enumeration would exceed its feasibility guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dpe
