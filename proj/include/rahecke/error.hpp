#pragma once

#include <stdexcept>
#include <string>

namespace rahecke {

/// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed diagram, unknown generator, parameter out of
/// range.  The CLI maps this to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (ball size, matrix size) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace rahecke
