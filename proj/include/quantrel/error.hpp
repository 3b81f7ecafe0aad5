#pragma once

#include <stdexcept>
#include <string>

namespace quantrel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scalars or matrices drawn from different quantales were combined.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// The active quantale cannot represent the requested result.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Source/target types or matrix shapes do not line up.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

/// An iteration did not stabilize within the caller's bound.
class Divergence : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariant of the type it was meant to build.
class InvalidValue : public Error {
 public:
  using Error::Error;
};

/// A name in a program or document has no binding.
class Unresolved : public Error {
 public:
  using Error::Error;
};

}  // namespace quantrel
