#pragma once

#include <stdexcept>
#include <string>

namespace cogmimo {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or precondition violation (CLI exit code 2).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Scenario file could not be parsed; message names the offending line.
class ParseError : public DomainError {
public:
    ParseError(const std::string& what, int line)
        : DomainError("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

/// Matrix is numerically rank deficient.
class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

/// All residual variances vanish: the interference term has no distribution.
class DegenerateSpectrumError : public Error {
public:
    explicit DegenerateSpectrumError(const std::string& what) : Error(what) {}
};

/// A numerical result left its admissible range by more than the clamp
/// window, or an evaluation is too ill-conditioned to trust (CLI exit code 3).
class NumericalInstabilityError : public Error {
public:
    explicit NumericalInstabilityError(const std::string& what) : Error(what) {}
};

/// One Monte Carlo trial hit a rank failure and must be redrawn.
class TrialInvalidError : public Error {
public:
    explicit TrialInvalidError(const std::string& what) : Error(what) {}
};

}  // namespace cogmimo
