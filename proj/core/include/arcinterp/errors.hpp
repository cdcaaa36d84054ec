#pragma once

#include <stdexcept>
#include <string>

namespace arcinterp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something unusable: mismatched dimensions, bad parameter
/// ranges, unreadable or malformed files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public InputError {
 public:
  using InputError::InputError;
};

/// A file was readable but its bytes do not follow the expected format.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

/// Numeric failure: non-finite values or arguments outside a function's domain.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace arcinterp
