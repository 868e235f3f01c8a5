#pragma once

#include <stdexcept>
#include <string>

namespace susyho {

/// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments outside the domain where a formula or construction is valid.
class DomainError : public Error {
public:
    using Error::Error;
};

class GammaPoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParameterPoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// epsilon must lie below the oscillator ground-state energy 1/2.
class EpsilonTooLarge : public DomainError {
public:
    EpsilonTooLarge(double epsilon, double bound, const std::string& what)
        : DomainError(what), epsilon_(epsilon), bound_(bound) {}
    double epsilon() const noexcept { return epsilon_; }
    double bound() const noexcept { return bound_; }

private:
    double epsilon_;
    double bound_;
};

/// Real beta with |beta| >= beta_c(epsilon); the seed solution acquires a node.
class BetaOutOfRange : public DomainError {
public:
    BetaOutOfRange(double beta, double beta_c, const std::string& what)
        : DomainError(what), beta_(beta), beta_c_(beta_c) {}
    double beta() const noexcept { return beta_; }
    double beta_critical() const noexcept { return beta_c_; }

private:
    double beta_;
    double beta_c_;
};

class ContourPlacementError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Grid too coarse for differentiation, or too narrow to contain a state.
class GridError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A series, quadrature or truncation did not reach its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace susyho
