#pragma once

#include <stdexcept>
#include <string>

namespace nielsen {

/// Malformed input text (JSON, rational literals, matrix shapes).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that parses but is not a consistent infra-nilmanifold datum.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The determinant character could not be decided within the resource caps.
class UndecidableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exactness certificate or series cross-check failed.
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace nielsen
