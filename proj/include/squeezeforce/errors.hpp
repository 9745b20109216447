#pragma once

#include <stdexcept>
#include <string>

namespace squeezeforce {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid physical parameters (bad ranges, violated moment bounds, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Parametric oscillator pumped at or beyond threshold (epsilon >= kappa/2).
class AboveThresholdError : public DomainError {
public:
    explicit AboveThresholdError(const std::string& msg) : DomainError(msg) {}
};

/// Two-photon correlation exceeds the Heisenberg bound M^2 <= N(N+1).
class MomentBoundError : public DomainError {
public:
    explicit MomentBoundError(const std::string& msg) : DomainError(msg) {}
};

/// A numerical procedure failed to produce a trustworthy result.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

/// Steady-state denominator collapsed to zero or below.
class DegenerateDenominatorError : public NumericalError {
public:
    explicit DegenerateDenominatorError(const std::string& msg) : NumericalError(msg) {}
};

/// Adaptive integration exhausted its refinement budget.
class QuadratureError : public NumericalError {
public:
    QuadratureError(const std::string& msg, double achieved)
        : NumericalError(msg), achieved_rel_error(achieved) {}

    double achieved_rel_error; // best relative change seen before giving up
};

/// Root bracketing or polishing failed to locate a sign change.
class NoCrossoverError : public NumericalError {
public:
    explicit NoCrossoverError(const std::string& msg) : NumericalError(msg) {}
};

} // namespace squeezeforce
