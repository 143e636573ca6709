#pragma once

#include <stdexcept>
#include <string>

namespace exoadapt {

// Error categories map onto CLI exit codes: config = 2, data = 3, numerical = 4.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape/size mismatches between paired inputs.
class DimensionError : public DataError {
 public:
  using DataError::DataError;
};

// Degenerate numerical input (e.g. parallel 6D rotation columns).
class DegeneracyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace exoadapt
