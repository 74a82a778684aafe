#pragma once

#include <stdexcept>
#include <string>

namespace smellkit {

/// Bad input data or configuration (maps to CLI exit code 2).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated internal contract or numerical failure (maps to CLI exit code 1).
class ComputeError : public std::runtime_error {
public:
    explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smellkit
