#pragma once

#include <stdexcept>
#include <string>

namespace gpsw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word, antimorphism or directive text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A letter outside Z_m.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

class ModulusMismatchError : public Error {
 public:
  using Error::Error;
};

// Parameters outside an operation's domain (m < 2, b < 2, morphism where an
// antimorphism is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A materialized word would exceed the configured length cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class NotAFactorError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpsw
