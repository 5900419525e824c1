#pragma once

#include <stdexcept>
#include <string>

namespace rap {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value passed to an operation is outside its documented domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Containers that must agree in shape (configs vs. subsystems, counts vs.
/// options) do not.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Malformed solution string or instance document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A solution cannot be represented in the digit-string codec.
class CodecError : public Error {
 public:
  using Error::Error;
};

/// An intermediate solution set exceeded the configured cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// The instance admits no configuration for some subsystem.
class InfeasibleInstanceError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle refuses instances above its size cap.
class OracleRefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rap
