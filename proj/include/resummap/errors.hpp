#pragma once

#include <stdexcept>
#include <string>

namespace resummap {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid map parameters (y0 outside (0,1), lambda outside (0,4], ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// The slowly-varying map left its admissible parameter range at step `step`.
class DomainEscapeError : public Error {
public:
    DomainEscapeError(const std::string& what, long step) : Error(what), step(step) {}
    long step;
};

// Iterative solver failed to converge.
class SolverError : public Error {
public:
    using Error::Error;
};

// A period-p solve collapsed onto a cycle of smaller true period.
class DegenerateCycleError : public SolverError {
public:
    using SolverError::SolverError;
};

// Requested cycle has complex branches for the given parameter.
class ComplexCycleError : public Error {
public:
    using Error::Error;
};

// The coefficient recursion bracket vanished at (m, at).
class ResonanceError : public Error {
public:
    ResonanceError(const std::string& what, int m, double at) : Error(what), m(m), at(at) {}
    int m;
    double at;
};

// Parameter lies outside the regime an approximation is built for.
class RegimeError : public Error {
public:
    using Error::Error;
};

// Requested series order exceeds the implemented data.
class InsufficientOrderError : public Error {
public:
    using Error::Error;
};

// Evaluation at a pole or logarithmic branch point.
class PoleError : public Error {
public:
    using Error::Error;
};

// Query point outside the hull of a sampled profile.
class HullError : public Error {
public:
    using Error::Error;
};

// An internal consistency assertion failed (e.g. non-negligible imaginary residue).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Malformed input file; `line` is 1-based.
class CsvParseError : public Error {
public:
    CsvParseError(const std::string& what, std::size_t line) : Error(what), line(line) {}
    std::size_t line;
};

} // namespace resummap
