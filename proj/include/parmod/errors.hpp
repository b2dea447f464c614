#pragma once

#include <stdexcept>
#include <string>

namespace parmod {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside the documented domain (even n, negative dimension, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class NonPolynomialResult : public Error {
 public:
  using Error::Error;
};

class InsufficientMoments : public Error {
 public:
  using Error::Error;
};

class DegenerateMoments : public Error {
 public:
  using Error::Error;
};

class RecurrenceMismatch : public Error {
 public:
  using Error::Error;
};

class KernelDimensionError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NotReducible : public Error {
 public:
  using Error::Error;
};

class CheckFailed : public Error {
 public:
  CheckFailed(std::string property, const std::string& detail)
      : Error(property + ": " + detail), property_(std::move(property)) {}

  const std::string& property() const noexcept { return property_; }

 private:
  std::string property_;
};

}  // namespace parmod
