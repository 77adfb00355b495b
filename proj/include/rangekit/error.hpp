#pragma once

#include <stdexcept>
#include <string>

namespace rangekit {

// Bad flag / config-file values. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed caller input (shape mismatches, out-of-range coordinates,
// unknown keys). CLI exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Data violates an operation's domain (no presence cells, degenerate
// class for AUC, ...). CLI exit code 2.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Filesystem or serialization failure. CLI exit code 3.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numerical breakdown (singular normal equations, non-finite results).
// CLI exit code 4.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace rangekit
