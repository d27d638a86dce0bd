#pragma once

#include <stdexcept>
#include <string>

namespace gmhd {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument (grid size, exponent, radius, ...) failed.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two fields that must share a grid do not.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// A Fourier weight or intermediate value left the finite double range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The time integration produced NaN/Inf or hit the blow-up heuristic.
class NumericalAbort : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class CheckpointError : public Error {
 public:
  using Error::Error;
};

}  // namespace gmhd
