#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace csgfcm {

/// Base of all library errors. The module tag is prefixed to the message
/// so that pipeline diagnostics say where a failure originated.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& what)
        : std::runtime_error("[" + module + "] " + what), module_(std::move(module))
    {
    }
    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

/// Malformed or inconsistent input: scene syntax, schema, invariants.
class InputError : public Error {
public:
    InputError(std::string module, const std::string& location, const std::string& what)
        : Error(std::move(module), location.empty() ? what : location + ": " + what), location_(location)
    {
    }
    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

/// Geometric failure: degenerate frames, empty model, points outside the domain.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Numerical failure, e.g. the iterative solver did not converge.
class NumericalError : public Error {
public:
    NumericalError(std::string module, const std::string& what, std::vector<double> history = {})
        : Error(std::move(module), what), history_(std::move(history))
    {
    }
    const std::vector<double>& residual_history() const noexcept { return history_; }

private:
    std::vector<double> history_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace csgfcm
