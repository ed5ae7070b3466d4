#pragma once

#include <stdexcept>
#include <string>

namespace qnetcap {

// Input outside the physical or mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed configuration file or command-line input.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Turbulence too strong for short-term beam statistics to apply.
struct WeakTurbulenceViolated : DomainError {
    using DomainError::DomainError;
};

// A node id referenced by a query is not present in the network.
struct UnknownNodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qnetcap
