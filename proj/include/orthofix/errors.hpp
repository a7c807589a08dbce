#pragma once

#include <stdexcept>
#include <string>

namespace orthofix {

/// Malformed or out-of-range input (bad file, bad index, ragged matrix).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (k >= 1, eps <= 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A documented precondition of an algorithm does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A runtime certificate (step inequality, a-priori bound) was violated.
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace orthofix
