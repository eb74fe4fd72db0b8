#pragma once

#include <stdexcept>
#include <string>

namespace gelfand {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in groups of different rank or root-of-unity order.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain (e.g. signature of an odd cycle).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size guard.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Group parameters outside the supported (involutory) family.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Two independently computed quantities disagree; signals a bug upstream.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gelfand
