#pragma once
#include <stdexcept>
#include <string>

namespace qmin {

// Violation of a semantic input contract (e.g. disconnected graph fed to an
// operation that requires connectivity). Distinct from std::invalid_argument,
// which covers malformed parameters, so callers can map them to different
// exit codes.
struct ContractViolation : std::runtime_error {
    explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical claim this library certifies failed to hold numerically.
// Reaching this on valid input would contradict the underlying theorems.
struct AssertionFailure : std::runtime_error {
    explicit AssertionFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmin
