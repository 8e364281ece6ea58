#pragma once

#include <stdexcept>
#include <string>

namespace domdim {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invariant-violating input (bad file, non-associative table, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but outside what the engine supports
/// (field too small for a trace-form radical, budget exceeded, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A consistency check inside the engine failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace domdim
