#pragma once

#include <stdexcept>
#include <string>

namespace galtwist {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (group specs, curve specs, coefficient lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// J/I has torsion, so the twisted sequence is not defined.
class NonFreeQuotientError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An enumeration would exceed the configured size bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold did not (indicates a bug).
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace galtwist
