#pragma once

#include <stdexcept>
#include <string>

namespace wsi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Gamma (or a Gamma-normalised quantity) evaluated at a pole.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Invalid hypergeometric parameters (c a non-positive integer).
class ParamError : public DomainError {
public:
    using DomainError::DomainError;
};

/// 2F1 requested on its branch cut [1, inf); use hyp2f1_boundary.
class CutError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Bessel orders violating the strict inequalities of the closed forms.
class OrderError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Test function support not contained in (0, inf).
class SupportError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Principal-value pole sitting on an endpoint of the integration support.
class PoleOnBoundaryError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Too few samples for an extrapolation.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// A quadrature did not reach its requested tolerance.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// A pairing could not be evaluated to the requested tolerance.
class ToleranceError : public NonConvergence {
public:
    using NonConvergence::NonConvergence;
};

}  // namespace wsi
