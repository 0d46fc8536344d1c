#pragma once

#include <stdexcept>
#include <string>

namespace lpbench {

/// Invalid parameters or an invalid request (maps to CLI exit code 1).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or inconsistent input data (maps to CLI exit code 2).
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace lpbench
