#pragma once

#include <stdexcept>
#include <string>

namespace hopsim {

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite derivative or state blow-up inside an integration step.
struct IntegrationError : SimError {
    using SimError::SimError;
};

// Argument outside the mathematical domain of a model (negative radicand,
// singular material parameter, infeasible engagement geometry, ...).
struct DomainError : SimError {
    using SimError::SimError;
};

// Hop requested with less propellant than one hop consumes.
struct PropellantError : SimError {
    using SimError::SimError;
};

// Retry budget exhausted before the commanded climb completed.
struct ClimbAbortedError : SimError {
    using SimError::SimError;
};

// Anchored robots' combined spine capacity fell below the system slope load.
struct SystemSlipError : SimError {
    using SimError::SimError;
};

// Requested hop mode cannot be realized within actuator limits.
struct InfeasibleModeError : SimError {
    using SimError::SimError;
};

// Scenario file parse or validation failure.
struct ConfigError : SimError {
    using SimError::SimError;
};

}  // namespace hopsim
