#pragma once

#include <stdexcept>
#include <string>

namespace qtrace {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input matrix fails the hermiticity tolerance.
struct NonHermitianInput : Error {
    using Error::Error;
};

/// The iterative eigensolver did not converge.
struct ConvergenceFailure : Error {
    using Error::Error;
};

/// A scalar or spectral argument lies outside the domain of the requested
/// function (non-positive argument of log_q, eigenvalue past the exp_q
/// bound, dimension mismatch, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A random-ensemble specification violates its own invariants.
struct InvalidSpec : Error {
    using Error::Error;
};

/// Trace of the alleged density matrix deviates from one.
struct NotADensityMatrix : Error {
    using Error::Error;
};

/// Matrix required to be negative definite is not.
struct NotNegativeDefinite : Error {
    using Error::Error;
};

/// The fixed matrix L has the wrong sign for the deformation regime.
struct SignConstraintViolated : Error {
    using Error::Error;
};

/// The numeric optimizer exhausted its iteration budget in every restart.
struct DidNotConverge : Error {
    using Error::Error;
};

/// Suite name not in the registry.
struct UnknownSuite : Error {
    using Error::Error;
};

/// Command line / configuration could not be parsed.
struct ConfigParseError : Error {
    using Error::Error;
};

/// Requested file does not exist or cannot be opened.
struct FileNotFound : Error {
    using Error::Error;
};

/// File exists but does not parse as the expected format.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace qtrace
