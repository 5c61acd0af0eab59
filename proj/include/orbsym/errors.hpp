#pragma once

#include <stdexcept>
#include <string>

namespace orbsym {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

// Mismatched truncation orders, non-square matrices, size mismatches.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class EmptyOrder : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class PoleAtOrigin : public Error {
 public:
  using Error::Error;
};

class RealnessViolation : public Error {
 public:
  using Error::Error;
};

// Pole hit while evaluating a closed form at a rational point.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class UnsupportedWeight : public Error {
 public:
  using Error::Error;
};

class OutOfScope : public Error {
 public:
  using Error::Error;
};

class DegenerateBasis : public Error {
 public:
  using Error::Error;
};

}  // namespace orbsym
