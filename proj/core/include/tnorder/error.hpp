#pragma once

#include <stdexcept>

namespace tnorder {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed network, or a weight outside the representation's domain.
class NetworkError : public Error {
 public:
  using Error::Error;
};

/// Contraction sequence that is not a valid (partial) binary tree
/// over the network it is applied to.
class SequenceError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured solver limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Problem instance outside a transformation's domain.
class InstanceError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or schema-violating serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tnorder
