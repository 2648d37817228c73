#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectral_indep {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input; `offset` is the byte position of the first bad byte.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A precondition of an operation was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Exact-arithmetic mode was requested on input that has no exact representation.
class ModeError : public Error {
public:
    using Error::Error;
};

/// The exact oracle refused an instance larger than its configured budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A bound was asked of a graph outside its domain (non-regular, edgeless, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A certificate is structurally malformed (as opposed to well-formed but invalid).
class CertificateError : public Error {
public:
    using Error::Error;
};

class ProjectorError : public Error {
public:
    ProjectorError(const std::string& what, double hermitian_residual, double idempotent_residual)
        : Error(what), hermitian_residual(hermitian_residual), idempotent_residual(idempotent_residual) {}
    double hermitian_residual;
    double idempotent_residual;
};

/// A weight matrix has support outside the edge set of its graph.
class PatternError : public Error {
public:
    using Error::Error;
};

}  // namespace spectral_indep
