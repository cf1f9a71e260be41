#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zwdpp {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// precondition / argument-domain violations
struct DomainError : Error {
    using Error::Error;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

struct ParameterPoleError : DomainError {
    using DomainError::DomainError;
};

struct OverflowError : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct LossOfOrthogonality : Error {
    using Error::Error;
};

struct CalibrationUnstable : Error {
    using Error::Error;
};

struct QuadratureNotConverged : Error {
    using Error::Error;
};

struct DerivativeUnstable : Error {
    using Error::Error;
};

struct DisagreementError : Error {
    using Error::Error;
};

// distance from v to the nearest (real) integer in the complex plane
inline double integer_distance(Cplx v) {
    return std::hypot(v.real() - std::round(v.real()), v.imag());
}

inline bool near_integer(Cplx v, double tol = 1e-12) {
    return integer_distance(v) <= tol;
}

inline bool near_nonpositive_integer(Cplx v, double tol = 1e-12) {
    return v.real() <= 0.5 && near_integer(v, tol);
}

}  // namespace zwdpp
