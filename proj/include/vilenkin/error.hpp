#pragma once

#include <stdexcept>
#include <string>

namespace vilenkin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group would not fit in machine integers, or a radix/resolution is invalid.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An index, rank, coordinate or exponent is outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two operands were built over different groups.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace vilenkin
