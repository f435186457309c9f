#pragma once

#include <stdexcept>
#include <string>

namespace f2coh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument values or ranges.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Operands living in different rings.
class ContextError : public Error {
 public:
  using Error::Error;
};

class NotAUnitError : public Error {
 public:
  using Error::Error;
};

class InvalidSubstitutionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Term-count, grid or exponent guard tripped.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace f2coh
