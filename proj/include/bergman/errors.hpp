#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/// Caller violated an operation's precondition (wrong dimension, exterior
/// point, inadmissible index, out-of-range parameter).
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// A map was evaluated at a point where it is singular (z = 0 for the
/// fiber-scaling biholomorphism).
struct SingularPointError : ContractViolation {
    explicit SingularPointError(const std::string& what) : ContractViolation(what) {}
};

/// A kernel denominator is exactly zero at the requested argument pair.
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// A truncated series failed to meet its tolerance within the expansion cap.
struct ConvergenceFailure : std::runtime_error {
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

/// An integrand evaluated to a non-finite value where that is not tolerated.
struct EvaluationError : std::runtime_error {
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bergman
