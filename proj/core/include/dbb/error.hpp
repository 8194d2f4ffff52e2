#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dbb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input: dimension mismatch, unknown key, out-of-range value.
/// `key()` names the offending field when there is one.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message, std::string key = {})
        : Error(message), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// An iterative kernel failed to converge within its cap.
class NumericError : public Error {
public:
    NumericError(const std::string& message, double residual)
        : Error(message), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// A matrix that had to be positive definite was not.
class SingularityError : public Error {
public:
    SingularityError(const std::string& message, double lambda_min)
        : Error(message), lambda_min_(lambda_min) {}

    double lambda_min() const noexcept { return lambda_min_; }

private:
    double lambda_min_;
};

/// Hessian smallest eigenvalue at or below the strong-convexity floor.
class NotStronglyConvexError : public Error {
public:
    NotStronglyConvexError(const std::string& message, double mu)
        : Error(message), mu_(mu) {}

    double mu() const noexcept { return mu_; }

private:
    double mu_;
};

/// Random graph or weight generation hit its retry/sweep cap.
class GenerationError : public Error {
public:
    GenerationError(const std::string& message, double deviation = 0.0)
        : Error(message), deviation_(deviation) {}

    double deviation() const noexcept { return deviation_; }

private:
    double deviation_;
};

/// A solver produced a non-finite iterate.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& message, std::size_t iteration, std::ptrdiff_t agent = -1)
        : Error(message), iteration_(iteration), agent_(agent) {}

    std::size_t iteration() const noexcept { return iteration_; }
    /// Index of the agent whose iterate blew up, or -1 for centralized runs.
    std::ptrdiff_t agent() const noexcept { return agent_; }

private:
    std::size_t iteration_;
    std::ptrdiff_t agent_;
};

/// Mixing spectrum outside [0, 1).
class InvalidSpectrumError : public Error {
public:
    using Error::Error;
};

/// Not enough records to draw a conclusion.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace dbb
