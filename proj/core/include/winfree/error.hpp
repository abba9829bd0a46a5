#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace winfree {

/// Raised when an argument violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The periodic comparison bounds L, R need a strictly positive integral of
/// beta over one period, which fails at zero coupling.
class ComparisonInapplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A time stepper produced a non-finite value.
class SimulationAborted : public std::runtime_error {
public:
    SimulationAborted(std::size_t step, const std::string& what)
        : std::runtime_error(what), step_(step) {}

    /// Index of the grid point whose state could not be computed.
    [[nodiscard]] std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Configuration document failed schema validation. Every problem is listed
/// with the JSON path of the offending key.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> problems);

    [[nodiscard]] const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

}  // namespace winfree
