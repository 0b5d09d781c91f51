#pragma once

#include <stdexcept>
#include <string>

namespace mhw {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violation (date ordering, curve domain, parameter bounds).
struct DomainError : Error {
  using Error::Error;
};

// Invalid period layout in schedule generation.
struct ScheduleError : Error {
  using Error::Error;
};

// Malformed or missing market-data input; message carries file/line context.
struct DataError : Error {
  using Error::Error;
};

// Curve construction failed to reprice an instrument.
struct BootstrapError : Error {
  using Error::Error;
};

// Exercise-boundary root could not be bracketed or refined.
struct RootError : Error {
  using Error::Error;
};

// Implied-volatility inversion rejected the target price.
struct InversionError : Error {
  using Error::Error;
};

// Optimizer failed to converge; message carries the run diagnostics.
struct CalibrationError : Error {
  using Error::Error;
};

// Bad run configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace mhw
