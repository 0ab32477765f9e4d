#pragma once

#include <stdexcept>
#include <string>

namespace otto {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    /// Short machine-readable name, used for the `error_flag` column of sweeps.
    [[nodiscard]] virtual const char* kind() const noexcept { return "Error"; }
};

// Input-domain errors (CLI exit code 1).

class ConfigError : public Error {
public:
    ConfigError(std::string message, int line, std::string key)
        : Error(std::move(message)), line_(line), key_(std::move(key)) {}
    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] const std::string& key() const noexcept { return key_; }
    [[nodiscard]] const char* kind() const noexcept override { return "ConfigError"; }

private:
    int line_;
    std::string key_;
};

class RangeError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "RangeError"; }
};

class InvalidSpeed : public RangeError {
public:
    using RangeError::RangeError;
    [[nodiscard]] const char* kind() const noexcept override { return "InvalidSpeed"; }
};

class RadiusExceeded : public RangeError {
public:
    using RangeError::RangeError;
    [[nodiscard]] const char* kind() const noexcept override { return "RadiusExceeded"; }
};

// Numerical failures (CLI exit code 2).

class NumericError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "NumericError"; }
};

class QuadratureFailure : public NumericError {
public:
    QuadratureFailure(std::string message, double error_estimate)
        : NumericError(std::move(message)), error_estimate_(error_estimate) {}
    /// Absolute error estimate reached when the subdivision budget ran out.
    [[nodiscard]] double error_estimate() const noexcept { return error_estimate_; }
    [[nodiscard]] const char* kind() const noexcept override { return "QuadratureFailure"; }

private:
    double error_estimate_;
};

class DegenerateCycle : public NumericError {
public:
    using NumericError::NumericError;
    [[nodiscard]] const char* kind() const noexcept override { return "DegenerateCycle"; }
};

class PurityOutOfRange : public NumericError {
public:
    using NumericError::NumericError;
    [[nodiscard]] const char* kind() const noexcept override { return "PurityOutOfRange"; }
};

class PositivityViolation : public NumericError {
public:
    using NumericError::NumericError;
    [[nodiscard]] const char* kind() const noexcept override { return "PositivityViolation"; }
};

}  // namespace otto
