#pragma once

#include <stdexcept>
#include <string>

namespace diskcyl {

/// Base class for all library errors. `code()` is a short stable identifier
/// suitable for machine-readable output (CSV error columns, logs).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Malformed arguments: non-unit direction vectors, invalid quadrature
/// specs, out-of-range exponents.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error("input", what) {}
};

/// Surface gap is zero or negative.
class PenetrationError : public Error {
public:
    explicit PenetrationError(const std::string& what) : Error("penetration", what) {}
};

/// A direction required by the chosen coordinate frame is undefined
/// (parallel axes for option A, vanishing in-plane projection for option B,
/// disk center on the cylinder axis).
class SingularConfigError : public Error {
public:
    SingularConfigError(std::string code, const std::string& what)
        : Error(std::move(code), what) {}
};

/// Directly constructed configuration violates cos^2(theta) <= sin^2(alpha),
/// so the option A/B expressions are not real-valued.
class InconsistentConfigError : public Error {
public:
    explicit InconsistentConfigError(const std::string& what)
        : Error("inconsistent_config", what) {}
};

/// The quadratic distance approximation has a non-positive discriminant
/// complement (Delta <= 0).
class InvalidConfigError : public Error {
public:
    explicit InvalidConfigError(const std::string& what)
        : Error("delta_nonpositive", what) {}
};

/// The linearized in-plane distance slope is non-positive, so the improper
/// integral behind the closed form does not converge.
class DivergentIntegralError : public Error {
public:
    explicit DivergentIntegralError(const std::string& what)
        : Error("by_nonpositive", what) {}
};

/// Requested a variant outside the supported exponent set.
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error("unsupported", what) {}
};

/// Numerical failure: non-finite integrand value, non-convergent truncation.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error("numeric", what) {}
};

}  // namespace diskcyl
