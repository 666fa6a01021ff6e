#pragma once

#include <stdexcept>
#include <string>

namespace mggs {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DepthError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A hard budget (element count, portrait size) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for the constant GGS-group.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mggs
