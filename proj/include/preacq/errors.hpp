#pragma once

#include <stdexcept>
#include <string>

namespace preacq {

/// Invalid configuration or precondition violation (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure during integration: blow-up, positivity loss, step cap.
/// Carries the frame or step index at which the failure was detected.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, long index)
        : std::runtime_error(what), index_(index) {}

    long index() const { return index_; }

private:
    long index_;
};

} // namespace preacq
