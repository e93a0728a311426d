#pragma once

#include <stdexcept>
#include <string>

namespace wsinterp {

/// Base class for numerical failures raised by the library. Argument
/// validation failures are reported as std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Frequency outside [-2*pi*B, 2*pi*B].
class DomainError : public Error {
public:
    using Error::Error;
};

/// The inverse weight G(omega) is not bounded away from zero.
class InvalidWeight : public Error {
public:
    InvalidWeight(const std::string& what, double omega) : Error(what), omega_(omega) {}
    double omega() const noexcept { return omega_; }

private:
    double omega_;
};

/// A least-squares weight fit produced a non-positive G(omega).
class FitError : public InvalidWeight {
public:
    using InvalidWeight::InvalidWeight;
};

class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double estimate, double error_bound)
        : Error(what), estimate_(estimate), error_bound_(error_bound) {}
    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// Cholesky factorization of the Gram system failed or the system is
/// numerically singular.
class NotPositiveDefinite : public Error {
public:
    NotPositiveDefinite(const std::string& what, double condition_estimate)
        : Error(what), condition_estimate_(condition_estimate) {}
    double condition_estimate() const noexcept { return condition_estimate_; }

private:
    double condition_estimate_;
};

/// The norm ball radius is smaller than the norm of the minimum-norm
/// interpolant, so no signal in the ball matches the data.
class InfeasibleBall : public Error {
public:
    using Error::Error;
};

class NumericalInconsistency : public Error {
public:
    using Error::Error;
};

}  // namespace wsinterp
