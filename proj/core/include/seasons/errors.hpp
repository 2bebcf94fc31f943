#pragma once

#include <stdexcept>
#include <string>

namespace seasons {

// Malformed input data or arguments outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A run configuration that cannot be simulated (e.g. an infeasible budget).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command-line flags or config-file keys. The message names the key.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seasons
