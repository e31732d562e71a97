#pragma once

#include <stdexcept>
#include <string>

namespace hallforge {

// Base of every error the engine raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A dimension vector, homomorphism space or representation space left the
// configured enumeration bounds. Never a silent truncation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction failed; indicates a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class NotASource : public Error {
 public:
  using Error::Error;
};

class NotASink : public Error {
 public:
  using Error::Error;
};

class MultipleEdges : public Error {
 public:
  using Error::Error;
};

class MixedShift : public Error {
 public:
  using Error::Error;
};

class UngradedClass : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hallforge
