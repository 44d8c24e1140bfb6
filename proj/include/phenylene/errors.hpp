#pragma once

#include <stdexcept>
#include <string>

namespace phenylene {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A reduction was requested on a vertex or triangle that does not fit its rule.
class NotReducible : public Error {
 public:
  using Error::Error;
};

class ConnectivityError : public Error {
 public:
  using Error::Error;
};

class InvalidPair : public Error {
 public:
  using Error::Error;
};

class LabelingError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because 3^(n-2) exceeds the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace phenylene
